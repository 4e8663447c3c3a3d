#pragma once

// Independent ground truth for the differentiation modes: finite
// differences, the derive-then-evaluate pipeline, let inlining, a seeded
// expression generator, and op-count profiling on benchmark families.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adc/ad.hpp"
#include "adc/counted.hpp"
#include "adc/eval.hpp"
#include "adc/expr.hpp"
#include "adc/symbolic.hpp"
#include "adc/tangent/dense.hpp"
#include "adc/tangent/sparse.hpp"

namespace adc {

// ---------------------------------------------------------------------------
// Reference gradients

// Central differences: component v is (f(x + h e_v) - f(x - h e_v)) / 2h.
DenseTangent<double> finite_diff_grad(const Expr& e, const Valuation<double>& point, double h = 1e-5);

// Largest magnitude of any intermediate value when evaluating e at point.
double max_intermediate_magnitude(const Expr& e, const Valuation<double>& point);

// {v: eval(point, derive(v, e))} over the free variables of e.
template <Semiring D>
SparseTangent<D> brute_force_grad(const Valuation<D>& point, const Expr& e) {
  typename SparseTangent<D>::Map m;
  for (VarId v : free_vars(e)) m.emplace(v, eval(point, derive(v, e)));
  return SparseTangent<D>(std::move(m));
}

// Let-free expression obtained by substituting every bound expression into
// its body. Sub-expressions are shared, not copied.
Expr inline_lets(const Expr& e);

template <Semiring D>
struct SecondOrderTable {
  D value;
  std::vector<D> gradient;
  std::vector<std::vector<D>> hessian;
};

// Second derivatives by running forward mode over forward mode, with the
// outer tangent taken in the Nagata numbers of the inner pass.
template <Semiring D>
SecondOrderTable<D> nested_second_order(const Valuation<D>& point, const Expr& e) {
  using Inner = Nagata<D, DenseTangent<D>>;
  const std::size_t n = point.size();
  Valuation<Inner> lifted;
  lifted.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    lifted.emplace_back(point[i], DenseTangent<D>::delta(VarId{static_cast<std::uint32_t>(i)}, n));
  }
  const auto outer = abstract_d<Inner, DenseTangent<Inner>>(lifted, e, LetStrategy::Standard);
  SecondOrderTable<D> t{outer.pri.pri, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    t.gradient.push_back(outer.tan[i].pri);
    std::vector<D> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(outer.tan[i].tan[j]);
    t.hessian.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Random expressions

struct NodeWeights {
  double var = 4.0;
  double zero = 0.3;
  double one = 1.0;
  double plus = 3.0;
  double times = 3.0;
  double neg = 0.0;
  double sin = 0.0;
  double cos = 0.0;
};

struct ExprGenConfig {
  std::uint64_t seed = 1;
  std::size_t max_nodes = 30;
  std::size_t num_vars = 3;
  NodeWeights weights;
  // Adds sin/cos (and negation) with the weights above, or with defaults
  // when those are zero.
  bool trig_enabled = false;
  // Chance that an interior node becomes a let.
  double let_probability = 0.0;
  // Binders are drawn from ids num_vars .. num_vars + let_vars - 1, or,
  // with shadow_probability, from the variables already in scope.
  std::size_t let_vars = 2;
  double shadow_probability = 0.25;
};

Expr gen_expr(const ExprGenConfig& config);

// ---------------------------------------------------------------------------
// Benchmark families and profiling

enum class Family { Sum, Chain, ProductTree };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// sum: left-nested x0 + x1 + ... cycling through the V variables;
// chain: right-nested products of x0; product-tree: balanced products
// cycling through the variables. Each has (N + 1) / 2 leaves.
Expr family_expr(Family f, std::size_t n, std::size_t v);

// Node count used when a size point gives only V.
inline std::size_t default_family_nodes(std::size_t v) { return 8 * v; }

struct OpProfile {
  std::string mode;
  std::string family;
  std::size_t nodes = 0;
  std::size_t vars = 0;
  OpCounter counts;
};

inline constexpr std::string_view kProfileCsvHeader = "mode,family,N,V,adds,muls,scales,deltas,touches";

std::string to_csv_row(const OpProfile& p);

// Modes accepted by profile_mode: the gradient modes by name, plus
// "symbolic", which counts the size of every derivative tree as touches.
bool is_profile_mode(std::string_view mode);

// Differentiates the family expression under counting and snapshots the
// counters. The primal and backward passes are both included.
OpProfile profile_mode(std::string_view mode, Family family, std::size_t n, std::size_t v);

enum class GrowthLaw { NTimesV, NLogV, NPlusV };

inline constexpr std::array<GrowthLaw, 3> kGrowthLaws = {GrowthLaw::NTimesV, GrowthLaw::NLogV, GrowthLaw::NPlusV};

std::string_view law_name(GrowthLaw law);
double law_value(GrowthLaw law, double n, double v);

struct ScalingVerdict {
  GrowthLaw best = GrowthLaw::NTimesV;
  // Sum of squared residuals of log(total) against log(law) + c, with c
  // fitted, indexed like kGrowthLaws.
  std::array<double, 3> residuals{};
  // Laws accepted for the mode; empty when no bound is asserted.
  std::vector<GrowthLaw> accepted;
  bool passes = false;
  std::vector<OpProfile> profiles;
};

std::vector<GrowthLaw> expected_laws(std::string_view mode);

// Requires at least four (N, V) points; throws std::invalid_argument
// otherwise.
ScalingVerdict scaling_check(std::string_view mode, Family family,
                             const std::vector<std::pair<std::size_t, std::size_t>>& sizes);

}  // namespace adc
