#include "adc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "adc/integer.hpp"

namespace adc {

// ---------------------------------------------------------------------------
// Reference gradients

DenseTangent<double> finite_diff_grad(const Expr& e, const Valuation<double>& point, double h) {
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
  std::vector<double> g(point.size(), 0.0);
  Valuation<double> probe = point;
  for (std::size_t i = 0; i < point.size(); ++i) {
    probe[i] = point[i] + h;
    const double up = eval(probe, e);
    probe[i] = point[i] - h;
    const double down = eval(probe, e);
    probe[i] = point[i];
    g[i] = (up - down) / (2 * h);
  }
  return DenseTangent<double>(std::move(g));
}

namespace {

thread_local double g_max_magnitude = 0;

struct Magnitude {
  double v = 0;

  Magnitude() = default;
  Magnitude(double x) : v(x) { g_max_magnitude = std::max(g_max_magnitude, std::abs(x)); }  // NOLINT

  static Magnitude zero() { return Magnitude(0.0); }
  static Magnitude one() { return Magnitude(1.0); }
  friend Magnitude operator+(Magnitude a, Magnitude b) { return Magnitude(a.v + b.v); }
  friend Magnitude operator*(Magnitude a, Magnitude b) { return Magnitude(a.v * b.v); }
  friend Magnitude operator-(Magnitude a) { return Magnitude(-a.v); }
  friend Magnitude sin(Magnitude a) { return Magnitude(std::sin(a.v)); }
  friend Magnitude cos(Magnitude a) { return Magnitude(std::cos(a.v)); }
};

}  // namespace

double max_intermediate_magnitude(const Expr& e, const Valuation<double>& point) {
  g_max_magnitude = 0;
  Valuation<Magnitude> p(point.begin(), point.end());
  eval(p, e);
  return g_max_magnitude;
}

Expr inline_lets(const Expr& e) {
  std::map<std::uint32_t, std::vector<Expr>> env;
  std::function<Expr(const Expr&)> go = [&](const Expr& n) -> Expr {
    switch (n.kind()) {
      case ExprKind::Var: {
        auto it = env.find(n.var().index);
        if (it != env.end() && !it->second.empty()) return it->second.back();
        return n;
      }
      case ExprKind::Zero:
      case ExprKind::One: return n;
      case ExprKind::Plus: return go(n.lhs()) + go(n.rhs());
      case ExprKind::Times: return go(n.lhs()) * go(n.rhs());
      case ExprKind::Neg: return -go(n.lhs());
      case ExprKind::Sin: return sin(go(n.lhs()));
      case ExprKind::Cos: return cos(go(n.lhs()));
      case ExprKind::Let: {
        Expr bound = go(n.lhs());
        env[n.var().index].push_back(std::move(bound));
        Expr body = go(n.rhs());
        env[n.var().index].pop_back();
        return body;
      }
    }
    return n;
  };
  return go(e);
}

// ---------------------------------------------------------------------------
// Random expressions

namespace {

class Generator {
 public:
  explicit Generator(const ExprGenConfig& c) : cfg_(c), rng_(c.seed) {
    w_ = c.weights;
    if (c.trig_enabled) {
      if (w_.sin == 0) w_.sin = 0.6;
      if (w_.cos == 0) w_.cos = 0.6;
      if (w_.neg == 0) w_.neg = 0.6;
    } else {
      w_.sin = 0;
      w_.cos = 0;
    }
    for (std::size_t i = 0; i < c.num_vars; ++i) scope_.push_back(VarId{static_cast<std::uint32_t>(i)});
  }

  Expr run() {
    if (cfg_.max_nodes == 0) throw std::invalid_argument("max_nodes must be positive");
    return node(uniform(1, cfg_.max_nodes));
  }

 private:
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p) { return p > 0 && std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

  template <std::size_t K>
  std::size_t pick(const std::array<double, K>& weights) {
    double total = 0;
    for (double x : weights) total += x;
    double r = std::uniform_real_distribution<double>(0, total)(rng_);
    for (std::size_t i = 0; i < K; ++i) {
      if (r < weights[i]) return i;
      r -= weights[i];
    }
    for (std::size_t i = K; i-- > 0;) {
      if (weights[i] > 0) return i;
    }
    return 0;
  }

  Expr leaf() {
    const double var_w = scope_.empty() ? 0.0 : w_.var;
    switch (pick(std::array<double, 3>{var_w, w_.zero, w_.one + (var_w + w_.zero + w_.one == 0 ? 1 : 0)})) {
      case 0: return Expr::variable(scope_[uniform(0, scope_.size() - 1)]);
      case 1: return Expr::zero();
      default: return Expr::one();
    }
  }

  Expr unary(std::size_t budget) {
    Expr a = node(budget - 1);
    switch (pick(std::array<double, 3>{w_.neg, w_.sin, w_.cos})) {
      case 0: return -a;
      case 1: return sin(a);
      default: return cos(a);
    }
  }

  Expr let(std::size_t budget) {
    VarId y;
    if (!scope_.empty() && coin(cfg_.shadow_probability)) {
      y = scope_[uniform(0, scope_.size() - 1)];
    } else {
      const std::size_t pool = std::max<std::size_t>(cfg_.let_vars, 1);
      y = VarId{static_cast<std::uint32_t>(cfg_.num_vars + uniform(0, pool - 1))};
    }
    const std::size_t left = uniform(1, budget - 2);
    Expr bound = node(left);
    scope_.push_back(y);
    Expr body = node(budget - 1 - left);
    scope_.pop_back();
    return Expr::let(y, std::move(bound), std::move(body));
  }

  Expr node(std::size_t budget) {
    const double unary_w = w_.neg + w_.sin + w_.cos;
    if (budget == 1) return leaf();
    if (budget == 2) return unary_w > 0 ? unary(budget) : leaf();
    if (coin(cfg_.let_probability)) return let(budget);
    switch (pick(std::array<double, 2>{w_.plus + w_.times, unary_w})) {
      case 0: {
        const bool is_plus = pick(std::array<double, 2>{w_.plus, w_.times}) == 0;
        const std::size_t left = uniform(1, budget - 2);
        Expr a = node(left);
        Expr b = node(budget - 1 - left);
        return is_plus ? a + b : a * b;
      }
      default: return unary(budget);
    }
  }

  const ExprGenConfig& cfg_;
  NodeWeights w_;
  std::mt19937_64 rng_;
  std::vector<VarId> scope_;
};

}  // namespace

Expr gen_expr(const ExprGenConfig& config) { return Generator(config).run(); }

// ---------------------------------------------------------------------------
// Benchmark families and profiling

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Sum: return "sum";
    case Family::Chain: return "chain";
    case Family::ProductTree: return "product-tree";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Sum, Family::Chain, Family::ProductTree}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

Expr leaf_var(std::size_t i, std::size_t v) { return Expr::variable(VarId{static_cast<std::uint32_t>(i % v)}); }

Expr balanced_product(std::size_t lo, std::size_t hi, std::size_t v) {
  if (hi - lo == 1) return leaf_var(lo, v);
  const std::size_t mid = lo + (hi - lo) / 2;
  return balanced_product(lo, mid, v) * balanced_product(mid, hi, v);
}

}  // namespace

Expr family_expr(Family f, std::size_t n, std::size_t v) {
  if (n == 0 || v == 0) throw std::invalid_argument("family sizes must be positive");
  const std::size_t leaves = (n + 1) / 2;
  switch (f) {
    case Family::Sum: {
      Expr acc = leaf_var(0, v);
      for (std::size_t i = 1; i < leaves; ++i) acc = acc + leaf_var(i, v);
      return acc;
    }
    case Family::Chain: {
      Expr acc = leaf_var(0, v);
      for (std::size_t i = 1; i < leaves; ++i) acc = leaf_var(0, v) * acc;
      return acc;
    }
    case Family::ProductTree: return balanced_product(0, leaves, v);
  }
  throw std::invalid_argument("unknown family");
}

std::string to_csv_row(const OpProfile& p) {
  const OpCounter& c = p.counts;
  return p.mode + "," + p.family + "," + std::to_string(p.nodes) + "," + std::to_string(p.vars) + "," +
         std::to_string(c.adds) + "," + std::to_string(c.muls) + "," + std::to_string(c.scales) + "," +
         std::to_string(c.deltas) + "," + std::to_string(c.touches);
}

bool is_profile_mode(std::string_view mode) { return mode == "symbolic" || parse_mode(mode).has_value(); }

OpProfile profile_mode(std::string_view mode, Family family, std::size_t n, std::size_t v) {
  if (!is_profile_mode(mode)) throw std::invalid_argument("unknown mode '" + std::string(mode) + "'");
  const Expr e = family_expr(family, n, v);
  OpProfile out{std::string(mode), std::string(family_name(family)), static_cast<std::size_t>(e.size()), v, {}};

  using S = Counted<Integer>;
  Valuation<S> point;
  for (std::size_t i = 0; i < v; ++i) point.emplace_back(Integer(static_cast<std::int64_t>(i % 5 + 2)));

  CountingScope scope(out.counts);
  if (mode == "symbolic") {
    for (std::size_t i = 0; i < v; ++i) count_touches(derive(VarId{static_cast<std::uint32_t>(i)}, e).size());
  } else {
    run_mode(*parse_mode(mode), point, e);
  }
  return out;
}

std::string_view law_name(GrowthLaw law) {
  switch (law) {
    case GrowthLaw::NTimesV: return "N*V";
    case GrowthLaw::NLogV: return "N*logV";
    case GrowthLaw::NPlusV: return "N+V";
  }
  return "?";
}

double law_value(GrowthLaw law, double n, double v) {
  switch (law) {
    case GrowthLaw::NTimesV: return n * v;
    case GrowthLaw::NLogV: return n * std::log2(std::max(v, 2.0));
    case GrowthLaw::NPlusV: return n + v;
  }
  return 0;
}

std::vector<GrowthLaw> expected_laws(std::string_view mode) {
  if (mode == "forward-dense" || mode == "forward-sparse" || mode == "reverse") return {GrowthLaw::NTimesV};
  if (mode == "reverse-cayley") return {GrowthLaw::NLogV, GrowthLaw::NPlusV};
  if (mode == "reverse-mut") return {GrowthLaw::NPlusV};
  return {};
}

ScalingVerdict scaling_check(std::string_view mode, Family family,
                             const std::vector<std::pair<std::size_t, std::size_t>>& sizes) {
  if (sizes.size() < 4) throw std::invalid_argument("scaling check needs at least four size points");
  ScalingVerdict out;
  for (const auto& [n, v] : sizes) out.profiles.push_back(profile_mode(mode, family, n, v));

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < kGrowthLaws.size(); ++k) {
    std::vector<double> r;
    for (const auto& p : out.profiles) {
      const double total = static_cast<double>(std::max<std::uint64_t>(p.counts.total(), 1));
      r.push_back(std::log(total) -
                  std::log(law_value(kGrowthLaws[k], static_cast<double>(p.nodes), static_cast<double>(p.vars))));
    }
    double mean = 0;
    for (double x : r) mean += x;
    mean /= static_cast<double>(r.size());
    double ss = 0;
    for (double x : r) ss += (x - mean) * (x - mean);
    out.residuals[k] = ss;
    if (ss < best) {
      best = ss;
      out.best = kGrowthLaws[k];
    }
  }
  out.accepted = expected_laws(mode);
  out.passes = out.accepted.empty() ||
               std::find(out.accepted.begin(), out.accepted.end(), out.best) != out.accepted.end();
  return out;
}

}  // namespace adc
