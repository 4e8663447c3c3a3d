#pragma once

// Differentiation as evaluation into Nagata numbers. abstract_d sends each
// variable x to N(point[x], delta x); choosing the tangent representation
// selects forward or reverse mode.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include "adc/eval.hpp"
#include "adc/expr.hpp"
#include "adc/nagata.hpp"
#include "adc/tangent/iso.hpp"
#include "adc/tangent/let_ops.hpp"

namespace adc {

template <class E>
struct is_linear_hom : std::false_type {};
template <class D, class E>
struct is_linear_hom<LinearHom<D, E>> : std::true_type {};

// Tangent of let y = e1 in e2 given the tangent de1 of e1 and the tangent
// de2 of e2 taken with y as an independent variable. y's own entry is
// dropped from the result.
template <class E>
E letin(VarId y, const E& de1, const E& de2, std::size_t arity) {
  if constexpr (is_linear_hom<E>::value) {
    return E::let_in(y, de1, de2, arity);
  } else {
    return scale(LetOps<E>::component(de2, y, arity), de1) + LetOps<E>::purge(de2, y, arity);
  }
}

// Let policy that differentiates the body against a fresh delta for the
// bound variable and recombines with letin.
struct Letin {
  template <class D, class E>
  Nagata<D, E> bind(VarId y, const Nagata<D, E>& bound, std::size_t arity) const {
    return {bound.pri, E::delta(y, arity)};
  }
  template <class D, class E>
  Nagata<D, E> finish(VarId y, const Nagata<D, E>& bound, Nagata<D, E> body, std::size_t arity) const {
    return {std::move(body.pri), letin(y, bound.tan, body.tan, arity)};
  }
};

enum class LetStrategy { Standard, Letin };

// Slots needed for a point and the let binders of e.
inline std::size_t tangent_arity(std::size_t point_size, const Expr& e) {
  return std::max(point_size, required_arity(e));
}

template <Semiring D, class E>
  requires KroneckerOver<E, D>
Nagata<D, E> abstract_d(const Valuation<D>& point, const Expr& e, LetStrategy lets = LetStrategy::Letin) {
  using N = Nagata<D, E>;
  const std::size_t arity = tangent_arity(point.size(), e);
  auto gen = [&](VarId v) -> N {
    if (v.index >= point.size()) {
      throw std::out_of_range("no value for variable index " + std::to_string(v.index));
    }
    return N(point[v.index], E::delta(v, arity));
  };
  if (lets == LetStrategy::Letin) return eval_with<N>(gen, e, arity, Letin{});
  return eval_with<N>(gen, e, arity, StandardLet{});
}

template <Semiring D>
using ForwardDense = Nagata<D, DenseTangent<D>>;
template <Semiring D>
using ForwardSparse = Nagata<D, SparseTangent<D>>;
template <Semiring D>
using Reverse = Nagata<D, LinearHom<D, SparseTangent<D>>>;
template <Semiring D>
using ReverseCayley = Nagata<D, LinearHom<D, CayleyHom<SparseTangent<D>>>>;
template <Semiring D>
using ReverseMut = Nagata<D, LinearHom<D, MutAction<D>>>;

template <Semiring D>
ForwardDense<D> forward_dense(const Valuation<D>& p, const Expr& e, LetStrategy l = LetStrategy::Letin) {
  return abstract_d<D, DenseTangent<D>>(p, e, l);
}
template <Semiring D>
ForwardSparse<D> forward_sparse(const Valuation<D>& p, const Expr& e, LetStrategy l = LetStrategy::Letin) {
  return abstract_d<D, SparseTangent<D>>(p, e, l);
}
template <Semiring D>
Reverse<D> reverse(const Valuation<D>& p, const Expr& e, LetStrategy l = LetStrategy::Letin) {
  return abstract_d<D, LinearHom<D, SparseTangent<D>>>(p, e, l);
}
template <Semiring D>
ReverseCayley<D> reverse_cayley(const Valuation<D>& p, const Expr& e, LetStrategy l = LetStrategy::Letin) {
  return abstract_d<D, LinearHom<D, CayleyHom<SparseTangent<D>>>>(p, e, l);
}
template <Semiring D>
ReverseMut<D> reverse_mut(const Valuation<D>& p, const Expr& e, LetStrategy l = LetStrategy::Letin) {
  return abstract_d<D, LinearHom<D, MutAction<D>>>(p, e, l);
}

// Canonical sparse gradient of any mode's result. `arity` must cover every
// variable index the tangent can mention (see tangent_arity).
template <Semiring D, class E>
SparseTangent<D> gradient(const Nagata<D, E>& n, std::size_t arity) {
  return IsoWitness<E>::to_sparse(n.tan, arity);
}

// Classic forward mode: one directional derivative along x.
template <Semiring D>
Dual<D> forward_classic(const Valuation<D>& point, VarId x, const Expr& e) {
  auto gen = [&](VarId v) -> Dual<D> {
    if (v.index >= point.size()) {
      throw std::out_of_range("no value for variable index " + std::to_string(v.index));
    }
    return Dual<D>(point[v.index], v == x ? adc::one<D>() : adc::zero<D>());
  };
  return eval<Dual<D>>(gen, e);
}

enum class Mode { ForwardDense, ForwardSparse, Reverse, ReverseCayley, ReverseMut };

inline constexpr Mode kAllModes[] = {Mode::ForwardDense, Mode::ForwardSparse, Mode::Reverse,
                                     Mode::ReverseCayley, Mode::ReverseMut};

inline std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::ForwardDense: return "forward-dense";
    case Mode::ForwardSparse: return "forward-sparse";
    case Mode::Reverse: return "reverse";
    case Mode::ReverseCayley: return "reverse-cayley";
    case Mode::ReverseMut: return "reverse-mut";
  }
  return "?";
}

inline std::optional<Mode> parse_mode(std::string_view name) {
  for (Mode m : kAllModes) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

template <Semiring D>
struct GradResult {
  D value;
  SparseTangent<D> gradient;
};

// Runs the requested mode and normalizes its tangent to a sparse map.
template <Semiring D>
GradResult<D> run_mode(Mode m, const Valuation<D>& point, const Expr& e, LetStrategy l = LetStrategy::Letin) {
  const std::size_t arity = tangent_arity(point.size(), e);
  auto finish = [&](const auto& n) { return GradResult<D>{n.pri, gradient(n, arity)}; };
  switch (m) {
    case Mode::ForwardDense: return finish(forward_dense(point, e, l));
    case Mode::ForwardSparse: return finish(forward_sparse(point, e, l));
    case Mode::Reverse: return finish(reverse(point, e, l));
    case Mode::ReverseCayley: return finish(reverse_cayley(point, e, l));
    case Mode::ReverseMut: return finish(reverse_mut(point, e, l));
  }
  throw std::logic_error("unknown mode");
}

}  // namespace adc
