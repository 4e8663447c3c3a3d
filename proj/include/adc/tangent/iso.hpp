#pragma once

// Representation/abstraction pairs relating each tangent representation to
// the dense baseline. Every specialization provides
//   rep(dense)          -> E
//   abs(e, arity)       -> DenseTangent<D>
//   to_sparse(e, arity) -> SparseTangent<D>
// and rep is a homomorphism for zero, ⊕, scaling and delta.

#include <cstddef>

#include "adc/tangent/cayley.hpp"
#include "adc/tangent/dense.hpp"
#include "adc/tangent/linear_hom.hpp"
#include "adc/tangent/mut_accum.hpp"
#include "adc/tangent/sparse.hpp"

namespace adc {

template <class E>
struct IsoWitness;

template <Semiring D>
struct IsoWitness<DenseTangent<D>> {
  using Scalar = D;
  static DenseTangent<D> rep(const DenseTangent<D>& f) { return f; }
  static DenseTangent<D> abs(const DenseTangent<D>& e, std::size_t arity) {
    return DenseTangent<D>(e.to_vector(std::max(arity, e.size())));
  }
  static SparseTangent<D> to_sparse(const DenseTangent<D>& e, std::size_t) {
    return SparseTangent<D>::from_dense(e);
  }
};

template <Semiring D>
struct IsoWitness<SparseTangent<D>> {
  using Scalar = D;
  static SparseTangent<D> rep(const DenseTangent<D>& f) { return SparseTangent<D>::from_dense(f); }
  static DenseTangent<D> abs(const SparseTangent<D>& e, std::size_t arity) { return e.to_dense(arity); }
  static SparseTangent<D> to_sparse(const SparseTangent<D>& e, std::size_t) { return e; }
};

template <Semiring D>
struct IsoWitness<LinearHom<D, SparseTangent<D>>> {
  using Scalar = D;
  using E = LinearHom<D, SparseTangent<D>>;
  static E rep(const DenseTangent<D>& f) { return E::rep(SparseTangent<D>::from_dense(f)); }
  static SparseTangent<D> to_sparse(const E& e, std::size_t) { return e.apply(adc::one<D>()); }
  static DenseTangent<D> abs(const E& e, std::size_t arity) { return to_sparse(e, arity).to_dense(arity); }
};

template <Semiring D>
struct IsoWitness<LinearHom<D, CayleyHom<SparseTangent<D>>>> {
  using Scalar = D;
  using E = LinearHom<D, CayleyHom<SparseTangent<D>>>;
  static E rep(const DenseTangent<D>& f) {
    return E::rep(CayleyHom<SparseTangent<D>>::rep(SparseTangent<D>::from_dense(f)));
  }
  // Backward pass threaded through one in-place map.
  static SparseTangent<D> to_sparse(const E& e, std::size_t) {
    SparseState<D> state;
    e.run_into(adc::one<D>(), state);
    return state.release();
  }
  static DenseTangent<D> abs(const E& e, std::size_t arity) { return to_sparse(e, arity).to_dense(arity); }
};

template <Semiring D>
struct IsoWitness<LinearHom<D, MutAction<D>>> {
  using Scalar = D;
  using E = LinearHom<D, MutAction<D>>;
  static E rep(const DenseTangent<D>& f) {
    return E::rep(MutAction<D>::from_sparse(SparseTangent<D>::from_dense(f)));
  }
  // Backward pass writing into freshly zeroed cells.
  static SparseTangent<D> to_sparse(const E& e, std::size_t arity) {
    MutAccum<D> cells(arity);
    MutState<D> state(cells);
    e.run_into(adc::one<D>(), state);
    return cells.consume();
  }
  static DenseTangent<D> abs(const E& e, std::size_t arity) { return to_sparse(e, arity).to_dense(arity); }
};

}  // namespace adc
