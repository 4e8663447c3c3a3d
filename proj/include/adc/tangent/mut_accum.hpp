#pragma once

// In-place gradient accumulation: a zero-initialized cell per variable,
// updated by a first-class accumulator action.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adc/algebra.hpp"
#include "adc/counted.hpp"
#include "adc/detail/release.hpp"
#include "adc/tangent/sparse.hpp"

namespace adc {

class ConsumedHandle : public std::logic_error {
 public:
  ConsumedHandle() : std::logic_error("accumulator handle already consumed") {}
};

template <Semiring D>
class MutAccum {
 public:
  explicit MutAccum(std::size_t arity) : cells_(arity, adc::zero<D>()) { count_touches(arity); }

  MutAccum(const MutAccum&) = delete;
  MutAccum& operator=(const MutAccum&) = delete;
  MutAccum(MutAccum&&) = default;
  MutAccum& operator=(MutAccum&&) = default;

  std::size_t arity() const { return cells_.size(); }

  // cell[v] := f(cell[v]); one read and one write.
  template <class F>
  void modify_at(VarId v, F&& f) {
    check(v);
    count_touches(2);
    cells_[v.index] = f(cells_[v.index]);
  }

  void add_at(VarId v, const D& d) {
    modify_at(v, [&d](const D& x) { return x + d; });
  }

  // Reads cell[v] and resets it to zero.
  D take(VarId v) {
    check(v);
    count_touches(2);
    return std::exchange(cells_[v.index], adc::zero<D>());
  }

  void write(VarId v, D d) {
    check(v);
    count_touches(1);
    cells_[v.index] = std::move(d);
  }

  D read(VarId v) const {
    check(v);
    count_touches(1);
    return cells_[v.index];
  }

  // Nonzero cells, without consuming the handle.
  SparseTangent<D> snapshot() const {
    if (consumed_) throw ConsumedHandle();
    typename SparseTangent<D>::Map m;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (!is_zero(cells_[i])) m.emplace_hint(m.end(), VarId{static_cast<std::uint32_t>(i)}, cells_[i]);
    }
    count_touches(cells_.size());
    return SparseTangent<D>(std::move(m));
  }

  // Final snapshot; the handle is dead afterwards.
  SparseTangent<D> consume() {
    SparseTangent<D> out = snapshot();
    consumed_ = true;
    cells_.clear();
    return out;
  }

  bool consumed() const { return consumed_; }

 private:
  void check(VarId v) const {
    if (consumed_) throw ConsumedHandle();
    if (v.index >= cells_.size()) {
      throw std::out_of_range("variable index " + std::to_string(v.index) + " outside accumulator");
    }
  }

  std::vector<D> cells_;
  bool consumed_ = false;
};

// An accumulator action. ⊕ is sequencing, d • p runs p with every added
// partial multiplied by d, and delta(v) adds one at v.
template <Semiring D>
class MutAction {
 public:
  MutAction() = default;  // does nothing

  static MutAction zero() { return MutAction(); }

  static MutAction delta(VarId v, std::size_t = 0) {
    count_delta();
    return add_at(v, adc::one<D>());
  }

  static MutAction add_at(VarId v, D d) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::AddAt;
    n->v = v;
    n->d = std::move(d);
    return MutAction(std::move(n));
  }

  // Sequence of add_at over the stored entries of m.
  static MutAction from_sparse(const SparseTangent<D>& m) {
    MutAction out;
    for (const auto& [v, d] : m.entries()) out = out + add_at(v, d);
    return out;
  }

  friend MutAction operator+(const MutAction& p, const MutAction& q) {
    if (!p.n_) return q;
    if (!q.n_) return p;
    auto n = std::make_shared<Node>();
    n->kind = Kind::Seq;
    n->a = p.n_;
    n->b = q.n_;
    return MutAction(std::move(n));
  }

  friend MutAction scale(const D& d, const MutAction& p) {
    count_scale();
    if (!p.n_) return p;
    auto n = std::make_shared<Node>();
    n->kind = Kind::Scaled;
    n->d = d;
    n->a = p.n_;
    return MutAction(std::move(n));
  }

  // Runs the action against `cells`, multiplying every added partial by
  // `factor` when one is given.
  void run(MutAccum<D>& cells, const std::optional<D>& factor = std::nullopt) const {
    struct Frame {
      const Node* n;
      std::optional<D> factor;
    };
    std::vector<Frame> todo;
    if (n_) todo.push_back({n_.get(), factor});
    while (!todo.empty()) {
      Frame f = std::move(todo.back());
      todo.pop_back();
      switch (f.n->kind) {
        case Kind::AddAt:
          cells.add_at(f.n->v, f.factor ? D(*f.factor * f.n->d) : f.n->d);
          break;
        case Kind::Seq:
          todo.push_back({f.n->b.get(), f.factor});
          todo.push_back({f.n->a.get(), std::move(f.factor)});
          break;
        case Kind::Scaled:
          todo.push_back({f.n->a.get(), f.factor ? D(*f.factor * f.n->d) : f.n->d});
          break;
      }
    }
  }

  // Equality of the accumulated effect on zeroed cells.
  friend bool operator==(const MutAction& p, const MutAction& q) {
    const std::size_t arity = std::max(p.max_index(), q.max_index());
    return mut_run(p, arity) == mut_run(q, arity);
  }

  // One past the largest index the action writes.
  std::size_t max_index() const {
    std::size_t m = 0;
    std::vector<const Node*> todo;
    if (n_) todo.push_back(n_.get());
    while (!todo.empty()) {
      const Node* n = todo.back();
      todo.pop_back();
      if (n->kind == Kind::AddAt) m = std::max(m, std::size_t{n->v.index} + 1);
      if (n->a) todo.push_back(n->a.get());
      if (n->b) todo.push_back(n->b.get());
    }
    return m;
  }

 private:
  enum class Kind { AddAt, Seq, Scaled };
  struct Node {
    Kind kind = Kind::AddAt;
    VarId v{};
    D d{};
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;

    Node() = default;
    ~Node() { detail::release_children(a, b); }
  };

  explicit MutAction(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  std::shared_ptr<const Node> n_;
};

// Allocates zeroed cells, runs the action and returns the nonzero cells.
template <Semiring D>
SparseTangent<D> mut_run(const MutAction<D>& p, std::size_t arity) {
  MutAccum<D> cells(arity);
  p.run(cells);
  return cells.consume();
}

}  // namespace adc
