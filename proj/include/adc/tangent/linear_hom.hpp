#pragma once

// Multiplicatively homogeneous maps D -> E, kept as an expression tree of
// their constructors so that running them (the backward pass) is iterative
// and every multiplication it performs is visible to the op counter.
//
// Constructors: zero, rep(e) = λd → d • e, delta(v) = λd → d • delta v,
// ⊕, scale(s, f) = λd → f(s ⊗ d), and let_in for let-bound partials.
// There is no way to wrap an arbitrary function, so linearity holds by
// construction.

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "adc/algebra.hpp"
#include "adc/counted.hpp"
#include "adc/detail/release.hpp"
#include "adc/tangent/let_ops.hpp"

namespace adc {

// d • delta(v) without materializing delta(v) first.
template <class E, class D>
struct ScaledDelta {
  static E make(const D& d, VarId v, std::size_t arity) { return scale(d, E::delta(v, arity)); }
};

template <class D>
struct ScaledDelta<SparseTangent<D>, D> {
  static SparseTangent<D> make(const D& d, VarId v, std::size_t) { return SparseTangent<D>::singleton(v, d); }
};

template <class D>
struct ScaledDelta<CayleyHom<SparseTangent<D>>, D> {
  static CayleyHom<SparseTangent<D>> make(const D& d, VarId v, std::size_t) {
    return CayleyHom<SparseTangent<D>>::rep(SparseTangent<D>::singleton(v, d));
  }
};

template <class D>
struct ScaledDelta<MutAction<D>, D> {
  static MutAction<D> make(const D& d, VarId v, std::size_t) { return MutAction<D>::add_at(v, d); }
};

template <Semiring D, class E>
  requires ModuleOver<E, D>
class LinearHom {
 public:
  using Scalar = D;
  using Target = E;

  LinearHom() = default;  // the zero map

  static LinearHom zero() { return LinearHom(); }

  static LinearHom rep(E e) {
    auto n = std::make_shared<Node>(Kind::Rep);
    n->value = std::move(e);
    return LinearHom(std::move(n));
  }

  static LinearHom delta(VarId v, std::size_t arity) {
    count_delta();
    auto n = std::make_shared<Node>(Kind::Delta);
    n->v = v;
    n->arity = arity;
    return LinearHom(std::move(n));
  }

  // λd → let m = body(d) in bound(m[y]) ⊕ (m without y).
  static LinearHom let_in(VarId y, LinearHom bound, LinearHom body, std::size_t arity) {
    if (!body.n_) return body;
    auto n = std::make_shared<Node>(Kind::LetIn);
    n->v = y;
    n->arity = arity;
    n->a = std::move(bound.n_);
    n->b = std::move(body.n_);
    return LinearHom(std::move(n));
  }

  bool is_zero() const { return !n_; }

  friend LinearHom operator+(const LinearHom& f, const LinearHom& g) {
    if (!f.n_) return g;
    if (!g.n_) return f;
    auto n = std::make_shared<Node>(Kind::Add);
    n->a = f.n_;
    n->b = g.n_;
    return LinearHom(std::move(n));
  }

  friend LinearHom scale(const D& s, const LinearHom& f) {
    count_scale();
    if (!f.n_) return f;
    auto n = std::make_shared<Node>(Kind::Scale);
    n->s = s;
    n->a = f.n_;
    return LinearHom(std::move(n));
  }

  friend LinearHom operator-(const LinearHom& f)
    requires Ring<D>
  {
    return scale(D(-adc::one<D>()), f);
  }

  // f(d), built as a value of E.
  E apply(const D& d) const {
    enum class Op : std::uint8_t { Run, AddJoin, LetJoin };
    struct Frame {
      const Node* n;
      D d;
      Op op;
    };
    std::vector<Frame> work;
    std::vector<E> out;
    if (!n_) return adc::zero<E>();
    work.push_back({n_.get(), d, Op::Run});
    while (!work.empty()) {
      Frame f = std::move(work.back());
      work.pop_back();
      if (!f.n) {
        out.push_back(adc::zero<E>());
        continue;
      }
      const Node& n = *f.n;
      if (f.op == Op::AddJoin) {
        E rhs = std::move(out.back());
        out.pop_back();
        out.back() = out.back() + rhs;
        continue;
      }
      if (f.op == Op::LetJoin) {
        E m = std::move(out.back());
        out.pop_back();
        D c = LetOps<E>::component(m, n.v, n.arity);
        out.push_back(LetOps<E>::purge(m, n.v, n.arity));
        work.push_back({f.n, f.d, Op::AddJoin});
        work.push_back({n.a.get(), std::move(c), Op::Run});
        continue;
      }
      switch (n.kind) {
        case Kind::Rep: out.push_back(scale(f.d, n.value)); break;
        case Kind::Delta: out.push_back(ScaledDelta<E, D>::make(f.d, n.v, n.arity)); break;
        case Kind::Scale: work.push_back({n.a.get(), n.s * f.d, Op::Run}); break;
        case Kind::Add:
          work.push_back({f.n, f.d, Op::AddJoin});
          work.push_back({n.b.get(), f.d, Op::Run});
          work.push_back({n.a.get(), std::move(f.d), Op::Run});
          break;
        case Kind::LetIn:
          work.push_back({f.n, f.d, Op::LetJoin});
          work.push_back({n.b.get(), std::move(f.d), Op::Run});
          break;
      }
    }
    return std::move(out.back());
  }

  // Runs f(d) directly against a mutable accumulator state. State needs
  //   add_at(VarId, D), take(VarId) -> optional<D>,
  //   restore(VarId, optional<D>), absorb(D, const E&).
  // A let-bound partial is isolated by clearing its slot before the body
  // runs and restoring the previous contents afterwards, so an enclosing
  // variable of the same name is never mixed in.
  template <class State>
  void run_into(const D& d, State& state) const {
    struct Frame {
      const Node* n;
      D d;
      std::optional<D> saved;
      bool after_let;
    };
    std::vector<Frame> work;
    if (n_) work.push_back({n_.get(), d, std::nullopt, false});
    while (!work.empty()) {
      Frame f = std::move(work.back());
      work.pop_back();
      const Node& n = *f.n;
      if (f.after_let) {
        std::optional<D> partial = state.take(n.v);
        state.restore(n.v, std::move(f.saved));
        if (partial && n.a) work.push_back({n.a.get(), std::move(*partial), std::nullopt, false});
        continue;
      }
      switch (n.kind) {
        case Kind::Rep: state.absorb(f.d, n.value); break;
        case Kind::Delta: state.add_at(n.v, f.d); break;
        case Kind::Scale: work.push_back({n.a.get(), n.s * f.d, std::nullopt, false}); break;
        case Kind::Add:
          work.push_back({n.b.get(), f.d, std::nullopt, false});
          work.push_back({n.a.get(), std::move(f.d), std::nullopt, false});
          break;
        case Kind::LetIn: {
          std::optional<D> saved = state.take(n.v);
          work.push_back({f.n, f.d, std::move(saved), true});
          work.push_back({n.b.get(), std::move(f.d), std::nullopt, false});
          break;
        }
      }
    }
  }

  // Equality of the underlying module elements f(one).
  friend bool operator==(const LinearHom& f, const LinearHom& g) {
    return f.apply(adc::one<D>()) == g.apply(adc::one<D>());
  }

 private:
  enum class Kind : std::uint8_t { Rep, Delta, Scale, Add, LetIn };
  struct Node {
    Kind kind;
    VarId v{};
    std::size_t arity = 0;
    D s{};
    E value{};
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;

    explicit Node(Kind k) : kind(k) {}
    ~Node() { detail::release_children(a, b); }
  };

  explicit LinearHom(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  std::shared_ptr<const Node> n_;
};

template <Semiring D, class E>
LinearHom<D, E> linhom_rep(E e) {
  return LinearHom<D, E>::rep(std::move(e));
}

template <Semiring D, class E>
E linhom_abs(const LinearHom<D, E>& f) {
  return f.apply(adc::one<D>());
}

template <Semiring D, class E>
E linhom_apply(const LinearHom<D, E>& f, const D& d) {
  return f.apply(d);
}

template <class D, class E>
struct LetOps<LinearHom<D, E>> {
  using Scalar = D;
  static D component(const LinearHom<D, E>& f, VarId v, std::size_t arity) {
    return LetOps<E>::component(f.apply(adc::one<D>()), v, arity);
  }
  static LinearHom<D, E> purge(const LinearHom<D, E>& f, VarId v, std::size_t arity) {
    return LinearHom<D, E>::rep(LetOps<E>::purge(f.apply(adc::one<D>()), v, arity));
  }
};

// Accumulator state over an in-place sparse map.
template <Semiring D>
class SparseState {
 public:
  void add_at(VarId v, const D& d) { acc_.insert_with_add(v, d); }

  std::optional<D> take(VarId v) {
    if (acc_.entries().find(v) == acc_.entries().end()) return std::nullopt;
    return acc_.take(v);
  }

  void restore(VarId v, std::optional<D> old) {
    if (old) acc_.insert_with_add(v, *old);
  }

  void absorb(const D& d, const CayleyHom<SparseTangent<D>>& f) {
    const SparseTangent<D> t = f.abs();
    absorb(d, t);
  }

  void absorb(const D& d, const SparseTangent<D>& t) {
    for (const auto& [v, x] : t.entries()) acc_.insert_with_add(v, d * x);
  }

  SparseTangent<D> release() { return std::move(acc_); }

 private:
  SparseTangent<D> acc_;
};

// Accumulator state over dense mutable cells.
template <Semiring D>
class MutState {
 public:
  explicit MutState(MutAccum<D>& cells) : cells_(cells) {}

  void add_at(VarId v, const D& d) { cells_.add_at(v, d); }

  std::optional<D> take(VarId v) {
    D d = cells_.take(v);
    if (is_zero(d)) return std::nullopt;
    return d;
  }

  void restore(VarId v, std::optional<D> old) {
    if (old) cells_.write(v, std::move(*old));
  }

  void absorb(const D& d, const MutAction<D>& p) { p.run(cells_, d); }

 private:
  MutAccum<D>& cells_;
};

}  // namespace adc
