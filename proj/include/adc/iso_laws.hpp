#pragma once

// Randomized checks that a tangent representation is a Kronecker
// isomorphism image of the dense baseline: rep and abs are mutually inverse
// and rep preserves zero, delta, scaling and addition.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "adc/laws.hpp"
#include "adc/tangent/iso.hpp"

namespace adc {

// `gen_d(rng)` draws a scalar; dense tangents have `arity` components drawn
// the same way, with roughly a third of them zero.
template <class E, class D, class GenD>
LawReport check_iso_laws(GenD&& gen_d, std::size_t arity, std::size_t trials, std::uint64_t seed = 1) {
  using W = IsoWitness<E>;
  detail::LawRunner run(seed, trials);
  auto scalar = [&](std::mt19937_64& rng) { return D(gen_d(rng)); };
  auto dense = [&](std::mt19937_64& rng) {
    std::vector<D> c(arity, adc::zero<D>());
    for (auto& x : c) {
      if (rng() % 3 != 0) x = scalar(rng);
    }
    return DenseTangent<D>(std::move(c));
  };
  auto var = [&](std::mt19937_64& rng) { return VarId{static_cast<std::uint32_t>(rng() % arity)}; };
  auto abs = [&](const E& e) { return W::abs(e, arity); };

  run.law("abs after rep", [&](auto& rng, std::string& w) {
    DenseTangent<D> f = dense(rng);
    w = detail::show_all(f);
    return abs(W::rep(f)) == f;
  });
  run.law("rep after abs", [&](auto& rng, std::string& w) {
    DenseTangent<D> f = dense(rng), g = dense(rng);
    D d = scalar(rng);
    E e = scale(d, W::rep(f)) + W::rep(g);
    w = detail::show_all(d, f, g);
    return abs(W::rep(abs(e))) == abs(e);
  });
  run.law("zero", [&](auto&, std::string&) { return abs(W::rep(DenseTangent<D>{})) == DenseTangent<D>{}; });
  run.law("delta", [&](auto& rng, std::string& w) {
    VarId v = var(rng);
    w = "v" + std::to_string(v.index);
    const DenseTangent<D> dv = DenseTangent<D>::delta(v, arity);
    return abs(W::rep(dv)) == dv && abs(E::delta(v, arity)) == dv;
  });
  run.law("scaling", [&](auto& rng, std::string& w) {
    D d = scalar(rng);
    DenseTangent<D> f = dense(rng);
    w = detail::show_all(d, f);
    return abs(W::rep(scale(d, f))) == abs(scale(d, W::rep(f)));
  });
  run.law("addition", [&](auto& rng, std::string& w) {
    DenseTangent<D> f = dense(rng), g = dense(rng);
    w = detail::show_all(f, g);
    return abs(W::rep(f + g)) == abs(W::rep(f) + W::rep(g));
  });
  return run.take();
}

}  // namespace adc
