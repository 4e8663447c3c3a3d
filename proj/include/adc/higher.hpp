#pragma once

// Higher-order derivatives.
//
// Compact2nd<D, T> carries a value and, per variable, the first partial
// paired with that partial's gradient in tangent representation T. With T
// dense it yields full Hessians in one forward pass; with T a reverse-mode
// hom it gives the forward-over-reverse composition used for
// Hessian-vector products.
//
// DerivStream<D> is the lazy tree of all iterated partial derivatives.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adc/ad.hpp"
#include "adc/eval.hpp"
#include "adc/nagata.hpp"
#include "adc/tangent/iso.hpp"

namespace adc {

template <Semiring D, class T>
  requires ModuleOver<T, D>
struct Compact2nd {
  using Inner = Nagata<D, T>;

  D value{};
  DenseTangent<Inner> grad;

  Compact2nd() : value(adc::zero<D>()) {}
  Compact2nd(D v, DenseTangent<Inner> g) : value(std::move(v)), grad(std::move(g)) {}

  static Compact2nd zero() { return {adc::zero<D>(), {}}; }
  static Compact2nd one() { return {adc::one<D>(), {}}; }

  static Compact2nd variable(D v, VarId x, std::size_t arity) {
    return {std::move(v), DenseTangent<Inner>::delta(x, arity)};
  }

  // The value together with its gradient re-expressed in T.
  Inner lifted() const {
    std::vector<D> firsts;
    firsts.reserve(grad.size());
    for (const Inner& g : grad.components()) firsts.push_back(g.pri);
    return Inner(value, IsoWitness<T>::rep(DenseTangent<D>(std::move(firsts))));
  }

  friend Compact2nd operator+(const Compact2nd& a, const Compact2nd& b) {
    return {a.value + b.value, a.grad + b.grad};
  }

  friend Compact2nd operator*(const Compact2nd& a, const Compact2nd& b) {
    return {a.value * b.value, scale(a.lifted(), b.grad) + scale(b.lifted(), a.grad)};
  }

  friend Compact2nd operator-(const Compact2nd& a)
    requires Ring<D>
  {
    return {-a.value, scale(Inner(-adc::one<D>(), adc::zero<T>()), a.grad)};
  }

  friend Compact2nd sin(const Compact2nd& a)
    requires Trig<D>
  {
    return {sin(a.value), scale(cos(a.lifted()), a.grad)};
  }

  friend Compact2nd cos(const Compact2nd& a)
    requires Trig<D>
  {
    return {cos(a.value), scale(-sin(a.lifted()), a.grad)};
  }

  friend bool operator==(const Compact2nd& a, const Compact2nd& b) {
    return a.value == b.value && a.grad == b.grad;
  }
};

template <Semiring D>
using SecondOrder = Compact2nd<D, DenseTangent<D>>;

template <Semiring D>
using HybridN = Compact2nd<D, LinearHom<D, CayleyHom<SparseTangent<D>>>>;

template <Semiring D, class T>
Compact2nd<D, T> eval_2nd(const Valuation<D>& point, const Expr& e) {
  const std::size_t arity = point.size();
  auto gen = [&](VarId v) {
    if (v.index >= point.size()) {
      throw std::out_of_range("no value for variable index " + std::to_string(v.index));
    }
    return Compact2nd<D, T>::variable(point[v.index], v, arity);
  };
  return eval_with<Compact2nd<D, T>>(gen, e, tangent_arity(arity, e));
}

// Value, gradient and Hessian in one pass.
template <Semiring D>
SecondOrder<D> forward_2nd(const Valuation<D>& point, const Expr& e) {
  return eval_2nd<D, DenseTangent<D>>(point, e);
}

template <Semiring D>
D first_partial(const SecondOrder<D>& s, VarId i) {
  return s.grad[i].pri;
}

template <Semiring D>
D second_partial(const SecondOrder<D>& s, VarId i, VarId j) {
  return s.grad[i].tan[j];
}

template <Semiring D>
std::vector<std::vector<D>> hessian_matrix(const SecondOrder<D>& s, std::size_t arity) {
  std::vector<std::vector<D>> h(arity, std::vector<D>(arity, adc::zero<D>()));
  for (std::size_t i = 0; i < arity; ++i) {
    for (std::size_t j = 0; j < arity; ++j) h[i][j] = s.grad[i].tan[j];
  }
  return h;
}

// H·v at the point, with the forward pass carrying reverse-mode gradients
// of each first partial. The rows of H are never built: the reverse
// tangents are combined with the weights of v and run once.
template <Semiring D>
DenseTangent<D> hessian_vector(const Valuation<D>& point, const Expr& e, const DenseTangent<D>& v) {
  using T = LinearHom<D, CayleyHom<SparseTangent<D>>>;
  if (v.size() != point.size()) throw std::invalid_argument("direction length must equal the number of variables");
  const HybridN<D> n = eval_2nd<D, T>(point, e);
  T combined;
  for (std::size_t i = 0; i < n.grad.size() && i < v.size(); ++i) {
    combined = combined + scale(v.components()[i], n.grad.components()[i].tan);
  }
  return IsoWitness<T>::to_sparse(combined, point.size()).to_dense(point.size());
}

// Lazily unfolding tree of derivatives: head() is the value and tail(v)
// the stream of the partial along v. Each tail is computed at most once.
template <Semiring D>
class DerivStream {
 public:
  DerivStream() : DerivStream(constant(adc::zero<D>())) {}

  static DerivStream constant(D c) {
    auto n = std::make_shared<Node>();
    n->head = std::move(c);
    n->constant = true;
    return DerivStream(std::move(n));
  }

  static DerivStream zero() { return constant(adc::zero<D>()); }
  static DerivStream one() { return constant(adc::one<D>()); }

  // value :< delta x
  static DerivStream variable(D value, VarId x) {
    return make(std::move(value), [x](VarId w) { return constant(w == x ? adc::one<D>() : adc::zero<D>()); });
  }

  const D& head() const { return n_->head; }
  bool is_constant() const { return n_->constant; }

  DerivStream tail(VarId v) const {
    if (n_->constant) return zero();
    auto it = n_->memo.find(v.index);
    if (it != n_->memo.end()) return it->second;
    DerivStream t = n_->next(v);
    n_->memo.emplace(v.index, t);
    return t;
  }

  friend DerivStream operator+(const DerivStream& a, const DerivStream& b) {
    if (a.is_constant() && b.is_constant()) return constant(a.head() + b.head());
    return make(a.head() + b.head(), [a, b](VarId v) { return a.tail(v) + b.tail(v); });
  }

  friend DerivStream operator*(const DerivStream& a, const DerivStream& b) {
    if (a.is_constant() && b.is_constant()) return constant(a.head() * b.head());
    return make(a.head() * b.head(), [a, b](VarId v) { return a.tail(v) * b + a * b.tail(v); });
  }

  friend DerivStream operator-(const DerivStream& a)
    requires Ring<D>
  {
    if (a.is_constant()) return constant(-a.head());
    return make(-a.head(), [a](VarId v) { return -a.tail(v); });
  }

  friend DerivStream sin(const DerivStream& a)
    requires Trig<D>
  {
    if (a.is_constant()) return constant(sin(a.head()));
    return make(sin(a.head()), [a](VarId v) { return cos(a) * a.tail(v); });
  }

  friend DerivStream cos(const DerivStream& a)
    requires Trig<D>
  {
    if (a.is_constant()) return constant(cos(a.head()));
    return make(cos(a.head()), [a](VarId v) { return -sin(a) * a.tail(v); });
  }

 private:
  struct Node {
    D head{};
    bool constant = false;
    std::function<DerivStream(VarId)> next;
    std::map<std::uint32_t, DerivStream> memo;
  };

  explicit DerivStream(std::shared_ptr<Node> n) : n_(std::move(n)) {}

  static DerivStream make(D head, std::function<DerivStream(VarId)> next) {
    auto n = std::make_shared<Node>();
    n->head = std::move(head);
    n->next = std::move(next);
    return DerivStream(std::move(n));
  }

  std::shared_ptr<Node> n_;
};

template <Semiring D>
DerivStream<D> stream_all(const Valuation<D>& point, const Expr& e) {
  auto gen = [&](VarId v) {
    if (v.index >= point.size()) {
      throw std::out_of_range("no value for variable index " + std::to_string(v.index));
    }
    return DerivStream<D>::variable(point[v.index], v);
  };
  return eval<DerivStream<D>>(gen, e);
}

// [f, ∂x f, ∂x² f, ...], depth + 1 entries.
template <Semiring D>
std::vector<D> take_diag(const DerivStream<D>& s, VarId x, std::size_t depth) {
  std::vector<D> out;
  DerivStream<D> cur = s;
  out.push_back(cur.head());
  for (std::size_t i = 0; i < depth; ++i) {
    cur = cur.tail(x);
    out.push_back(cur.head());
  }
  return out;
}

// Heads along successive partials: [f, ∂p0 f, ∂p1 ∂p0 f, ...].
template <Semiring D>
std::vector<D> take_path(const DerivStream<D>& s, const std::vector<VarId>& path) {
  std::vector<D> out;
  DerivStream<D> cur = s;
  out.push_back(cur.head());
  for (VarId v : path) {
    cur = cur.tail(v);
    out.push_back(cur.head());
  }
  return out;
}

}  // namespace adc
