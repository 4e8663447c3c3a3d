#pragma once

// Per-representation access to a single partial, used to differentiate
// through let-bindings: component(e, y) reads the partial for y and
// purge(e, y) drops it.

#include <algorithm>
#include <cstddef>

#include "adc/tangent/cayley.hpp"
#include "adc/tangent/dense.hpp"
#include "adc/tangent/mut_accum.hpp"
#include "adc/tangent/sparse.hpp"

namespace adc {

template <class E>
struct LetOps;

template <class D>
struct LetOps<DenseTangent<D>> {
  using Scalar = D;
  static D component(const DenseTangent<D>& t, VarId v, std::size_t) { return t[v]; }
  static DenseTangent<D> purge(const DenseTangent<D>& t, VarId v, std::size_t) {
    if (v.index >= t.size()) return t;
    std::vector<D> c = t.components();
    c[v.index] = adc::zero<D>();
    return DenseTangent<D>(std::move(c));
  }
};

template <class D>
struct LetOps<SparseTangent<D>> {
  using Scalar = D;
  static D component(const SparseTangent<D>& t, VarId v, std::size_t) { return t[v]; }
  static SparseTangent<D> purge(const SparseTangent<D>& t, VarId v, std::size_t) { return t.without(v); }
};

template <class E>
struct LetOps<CayleyHom<E>> {
  using Scalar = typename LetOps<E>::Scalar;
  static Scalar component(const CayleyHom<E>& f, VarId v, std::size_t arity) {
    return LetOps<E>::component(f.abs(), v, arity);
  }
  static CayleyHom<E> purge(const CayleyHom<E>& f, VarId v, std::size_t arity) {
    return CayleyHom<E>::rep(LetOps<E>::purge(f.abs(), v, arity));
  }
};

template <class D>
struct LetOps<MutAction<D>> {
  using Scalar = D;
  static D component(const MutAction<D>& p, VarId v, std::size_t arity) {
    return mut_run(p, std::max(arity, p.max_index()))[v];
  }
  static MutAction<D> purge(const MutAction<D>& p, VarId v, std::size_t arity) {
    return MutAction<D>::from_sparse(mut_run(p, std::max(arity, p.max_index())).without(v));
  }
};

}  // namespace adc
