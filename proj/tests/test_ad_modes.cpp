#include <gtest/gtest.h>

#include <sstream>

#include "adc/parse.hpp"
#include "adc/probe.hpp"
#include "support.hpp"

namespace adc {
namespace {

using I = Integer;
using Sparse = SparseTangent<I>;

template <class T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

TEST(Modes, ClassicForwardTrace) {
  const Expr x = var(0);
  const Dual<I> d = forward_classic(Valuation<I>{I(5)}, VarId{0}, x * x + x);
  EXPECT_EQ(show(d), "D 30 11");
}

TEST(Modes, TwoVariableExample) {
  const Parsed p = parse("x * y + x + 1");
  const Valuation<I> pt{I(5), I(3)};
  const auto fd = forward_dense(pt, p.expr);
  EXPECT_EQ(fd.pri, I(21));
  EXPECT_EQ(fd.tan, (DenseTangent<I>{I(4), I(5)}));
  const auto fs = forward_sparse(pt, p.expr);
  EXPECT_EQ(show(fs), "N 21 {0:4, 1:5}");
}

TEST(Modes, AllModesOnCubic) {
  for (Mode m : kAllModes) {
    const GradResult<I> g = run_mode(m, Valuation<I>{I(5)}, testing::cubic());
    EXPECT_EQ(g.value, I(300)) << mode_name(m);
    EXPECT_EQ(g.gradient, (Sparse{{VarId{0}, I(170)}})) << mode_name(m);
  }
}

TEST(Modes, LetExample) {
  const Parsed p = parse("let y = x + x in y * y");
  for (Mode m : kAllModes) {
    const GradResult<I> g = run_mode(m, Valuation<I>{I(5), I(0)}, p.expr);
    EXPECT_EQ(g.value, I(100)) << mode_name(m);
    EXPECT_EQ(g.gradient, (Sparse{{VarId{0}, I(40)}})) << mode_name(m);
  }
  EXPECT_EQ(show(forward_sparse(Valuation<I>{I(5), I(0)}, p.expr)), "N 100 {0:40}");
}

TEST(Modes, ShadowingLetsKeepOuterPartials) {
  const Parsed p = parse("let x = x * x in x * y + x");
  const Valuation<I> pt{I(3), I(2)};
  // (x^2) y + x^2: d/dx = 2xy + 2x = 18, d/dy = x^2 = 9.
  for (Mode m : kAllModes) {
    for (LetStrategy l : {LetStrategy::Standard, LetStrategy::Letin}) {
      const GradResult<I> g = run_mode(m, pt, p.expr, l);
      EXPECT_EQ(g.value, I(27));
      EXPECT_EQ(g.gradient, (Sparse{{VarId{0}, I(18)}, {VarId{1}, I(9)}})) << mode_name(m);
    }
  }
}

TEST(Modes, RandomAgreement) {
  std::mt19937_64 rng(71);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Expr e = gen_expr(testing::let_config(seed, 150, 6));
    const Valuation<I> pt = testing::int_point(rng, required_arity(e));
    const Sparse expected = brute_force_grad(pt, e);
    const I value = eval(pt, e);
    for (Mode m : kAllModes) {
      for (LetStrategy l : {LetStrategy::Standard, LetStrategy::Letin}) {
        const GradResult<I> g = run_mode(m, pt, e, l);
        ASSERT_EQ(g.value, value) << seed << ' ' << mode_name(m);
        ASSERT_EQ(g.gradient, expected) << seed << ' ' << mode_name(m) << ": " << pretty(e);
      }
    }
  }
}

TEST(Modes, RationalAndRealScalars) {
  const Parsed p = parse("x * x * y - y");
  const Valuation<Rational> pr{Rational(1, 2), Rational(2, 3)};
  for (Mode m : kAllModes) {
    const GradResult<Rational> g = run_mode(m, pr, p.expr);
    EXPECT_EQ(g.value, Rational(-1, 2));
    EXPECT_EQ(g.gradient, (SparseTangent<Rational>{{VarId{0}, Rational(2, 3)}, {VarId{1}, Rational(-3, 4)}}));
  }
  const Parsed q = parse("sin(x) * cos(y)");
  const GradResult<double> g = run_mode(Mode::ReverseMut, Valuation<double>{0.3, 0.7}, q.expr);
  EXPECT_DOUBLE_EQ(g.gradient[VarId{0}], std::cos(0.3) * std::cos(0.7));
  EXPECT_DOUBLE_EQ(g.gradient[VarId{1}], -std::sin(0.3) * std::sin(0.7));
}

TEST(Modes, TrigOnIntegersIsACapabilityError) {
  const Parsed p = parse("sin(x)");
  EXPECT_THROW((void)run_mode(Mode::Reverse, Valuation<I>{I(1)}, p.expr), UnsupportedPrimitive);
}

// Evaluating the symbolic derivative agrees with classic forward mode.
TEST(Symbolic, SpecificationIdentity) {
  std::mt19937_64 rng(81);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Expr e = gen_expr(testing::let_config(seed, 80, 3));
    const Valuation<I> pt = testing::int_point(rng, required_arity(e));
    const VarId x{static_cast<std::uint32_t>(rng() % 3)};
    const Dual<I> fc = forward_classic(pt, x, e);
    const Dual<Expr> s = symbolic(x, e);
    ASSERT_EQ(fc.pri, eval(pt, s.pri)) << seed;
    ASSERT_EQ(fc.tan, eval(pt, s.tan)) << seed;
    ASSERT_EQ(fc.tan, eval(pt, derive(x, e))) << seed;
  }
}

TEST(Symbolic, IsForwardModeAtExpressions) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    ExprGenConfig c = testing::let_config(seed, 60, 3);
    c.trig_enabled = true;
    const Expr e = gen_expr(c);
    const VarId x{static_cast<std::uint32_t>(seed % 3)};
    const Valuation<Expr> vars{var(0), var(1), var(2), var(3), var(4), var(5)};
    Valuation<Expr> pt(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(required_arity(e)));
    const Dual<Expr> via_forward = forward_classic(pt, x, e);
    ASSERT_TRUE(probe_equal(via_forward.tan, symbolic(x, e).tan)) << seed;
    ASSERT_TRUE(probe_equal(via_forward.tan, derive(x, e))) << seed;
  }
}

TEST(Symbolic, DerivativesOfSmallExamples) {
  const Parsed p = parse("x * x + x");
  EXPECT_EQ(pretty(simplify_basic(derive(VarId{0}, p.expr)), p.registry), "x + x + 1");
  EXPECT_EQ(eval(Valuation<I>{I(5)}, derive_n(VarId{0}, testing::cubic(), 2)), I(64));
  EXPECT_EQ(derive_n(VarId{0}, testing::cubic(), 0), testing::cubic());
  const auto [v, d] = derive_tuple(VarId{0}, testing::cubic());
  EXPECT_EQ(eval(Valuation<I>{I(5)}, v), I(300));
  EXPECT_EQ(eval(Valuation<I>{I(5)}, d), I(170));
}

// Differentiating the let directly matches differentiating its expansion.
TEST(Letin, MatchesInlineSubstitution) {
  std::mt19937_64 rng(91);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Expr e = gen_expr(testing::let_config(seed, 120, 4));
    const Expr flat = inline_lets(e);
    ASSERT_FALSE(contains_kind(flat, ExprKind::Let));
    const Valuation<I> pt = testing::int_point(rng, required_arity(e));
    ASSERT_EQ(eval(pt, flat), eval(pt, e));
    for (Mode m : kAllModes) {
      ASSERT_EQ(run_mode(m, pt, e).gradient, run_mode(m, pt, flat).gradient) << seed << ' ' << mode_name(m);
    }
  }
}

TEST(Gradient, FiniteDifferencesOnTrigPolynomials) {
  std::mt19937_64 rng(101);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    ExprGenConfig c = testing::polynomial_config(seed, 40, 3);
    c.trig_enabled = true;
    const Expr e = gen_expr(c);
    const Valuation<double> pt = testing::real_point(rng, required_arity(e));
    if (max_intermediate_magnitude(e, pt) > 1e3) continue;
    const SparseTangent<double> g = run_mode(Mode::Reverse, pt, e).gradient;
    const DenseTangent<double> fd = finite_diff_grad(e, pt);
    for (std::size_t i = 0; i < pt.size(); ++i) {
      const double a = g[VarId{static_cast<std::uint32_t>(i)}], b = fd[i];
      EXPECT_LE(std::abs(a - b), std::max(1e-6, 1e-4 * std::max(std::abs(a), std::abs(b)))) << seed;
    }
    ++checked;
  }
  EXPECT_GT(checked, 80);
}

}  // namespace
}  // namespace adc
