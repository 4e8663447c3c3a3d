#pragma once

// Additively homogeneous endo-maps of a commutative monoid E: each value
// denotes λe' → e' ⊕ e for some e. The monoid structure is composition,
// which turns every ⊕ into an O(1) node allocation; the additions happen
// when the map is finally run against an accumulator.

#include <cstddef>
#include <memory>
#include <vector>

#include "adc/algebra.hpp"
#include "adc/counted.hpp"
#include "adc/detail/release.hpp"
#include "adc/tangent/sparse.hpp"

namespace adc {

// state := state ⊕ e, in place where the representation allows it.
template <class E>
struct Absorb {
  static void apply(E& state, const E& e) { state = state + e; }
};

template <class D>
struct Absorb<SparseTangent<D>> {
  static void apply(SparseTangent<D>& state, const SparseTangent<D>& e) { state.absorb(e); }
};

template <CommutativeMonoid E>
class CayleyHom {
 public:
  CayleyHom() = default;  // identity map

  static CayleyHom zero() { return CayleyHom(); }

  static CayleyHom rep(E e) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Rep;
    n->value = std::move(e);
    return CayleyHom(std::move(n));
  }

  static CayleyHom delta(VarId v, std::size_t arity)
    requires requires { E::delta(v, arity); }
  {
    return rep(E::delta(v, arity));
  }

  // Runs the map on `start`.
  E apply(E start) const {
    std::vector<const Node*> todo;
    if (n_) todo.push_back(n_.get());
    while (!todo.empty()) {
      const Node* n = todo.back();
      todo.pop_back();
      if (n->kind == Kind::Rep) {
        Absorb<E>::apply(start, n->value);
      } else {
        todo.push_back(n->b.get());
        todo.push_back(n->a.get());
      }
    }
    return start;
  }

  // Image of zero.
  E abs() const { return apply(adc::zero<E>()); }

  bool is_identity() const { return !n_; }

  friend CayleyHom operator+(const CayleyHom& f, const CayleyHom& g) {
    if (!f.n_) return g;
    if (!g.n_) return f;
    auto n = std::make_shared<Node>();
    n->kind = Kind::Compose;
    n->a = f.n_;
    n->b = g.n_;
    return CayleyHom(std::move(n));
  }

  // F is deduced so that lookups for scale(d, e) with e not a CayleyHom
  // reject this overload before its module constraint is examined.
  template <Semiring D, std::same_as<CayleyHom> F>
    requires ModuleOver<E, D>
  friend CayleyHom scale(const D& d, const F& f) {
    return rep(scale(d, f.abs()));
  }

  friend bool operator==(const CayleyHom& f, const CayleyHom& g) { return f.abs() == g.abs(); }

 private:
  enum class Kind { Rep, Compose };
  struct Node {
    Kind kind = Kind::Rep;
    E value{};
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;

    Node() = default;
    ~Node() { detail::release_children(a, b); }
  };

  explicit CayleyHom(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  std::shared_ptr<const Node> n_;
};

template <CommutativeMonoid E>
CayleyHom<E> cayley_rep(E e) {
  return CayleyHom<E>::rep(std::move(e));
}

template <CommutativeMonoid E>
E cayley_abs(const CayleyHom<E>& f) {
  return f.abs();
}

}  // namespace adc
