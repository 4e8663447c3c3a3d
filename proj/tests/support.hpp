#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "adc/eval.hpp"
#include "adc/expr.hpp"
#include "adc/integer.hpp"
#include "adc/oracle.hpp"
#include "adc/rational.hpp"

namespace adc::testing {

inline Expr x0() { return var(0); }
inline Expr x1() { return var(1); }

// x * ((x + 1) * (x + x))
inline Expr cubic() {
  const Expr x = x0();
  return x * ((x + Expr::one()) * (x + x));
}

// Small integers in [-4, 4].
inline Integer small_int(std::mt19937_64& rng) {
  return Integer(std::uniform_int_distribution<std::int64_t>(-4, 4)(rng));
}

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 6);
  return Rational(num(rng), den(rng));
}

inline Valuation<Integer> int_point(std::mt19937_64& rng, std::size_t n) {
  Valuation<Integer> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(small_int(rng));
  return p;
}

inline Valuation<double> real_point(std::mt19937_64& rng, std::size_t n, double lo = -2, double hi = 2) {
  std::uniform_real_distribution<double> u(lo, hi);
  Valuation<double> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(u(rng));
  return p;
}

inline ExprGenConfig polynomial_config(std::uint64_t seed, std::size_t max_nodes, std::size_t vars) {
  ExprGenConfig c;
  c.seed = seed;
  c.max_nodes = max_nodes;
  c.num_vars = vars;
  return c;
}

inline ExprGenConfig let_config(std::uint64_t seed, std::size_t max_nodes, std::size_t vars) {
  ExprGenConfig c = polynomial_config(seed, max_nodes, vars);
  c.let_probability = 0.2;
  c.let_vars = 3;
  c.shadow_probability = 0.3;
  return c;
}

}  // namespace adc::testing
