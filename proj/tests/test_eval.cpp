#include <gtest/gtest.h>

#include "adc/counted.hpp"
#include "adc/parse.hpp"
#include "adc/probe.hpp"
#include "adc/shallow.hpp"
#include "support.hpp"

namespace adc {
namespace {

TEST(Eval, WorkedExamples) {
  const Expr x = var(0), y = var(1);
  EXPECT_EQ(eval(Valuation<Integer>{Integer(5)}, x * x + x), Integer(30));
  EXPECT_EQ(eval(Valuation<Integer>{Integer(5), Integer(3)}, x * y + x + Expr::one()), Integer(21));
  EXPECT_EQ(eval(Valuation<Integer>{Integer(5)}, testing::cubic()), Integer(300));
}

TEST(Eval, LetShadowsAndRestores) {
  // let x = x + 1 in (let x = x * x in x) + x, at x = 2: 9 + 3.
  const Parsed p = parse("let x = x + 1 in (let x = x * x in x) + x");
  EXPECT_EQ(eval(Valuation<Integer>{Integer(2)}, p.expr), Integer(12));
}

TEST(Eval, LetBoundIsEvaluatedOnce) {
  const Parsed p = parse("let y = x + x in y * y");
  OpCounter c;
  Counted<Integer> r;
  {
    CountingScope scope(c);
    r = eval(Valuation<Counted<Integer>>{Counted<Integer>(Integer(3)), Counted<Integer>()}, p.expr);
  }
  EXPECT_EQ(r.value(), Integer(36));
  EXPECT_EQ(c.adds, 1u);
  EXPECT_EQ(c.muls, 1u);
}

TEST(Eval, CountingIsValueTransparent) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Expr e = gen_expr(testing::let_config(seed, 80, 4));
    const Valuation<Integer> p = testing::int_point(rng, required_arity(e));
    Valuation<Counted<Integer>> cp(p.begin(), p.end());
    OpCounter c;
    CountingScope scope(c);
    ASSERT_EQ(eval(cp, e).value(), eval(p, e)) << seed;
  }
}

// A semiring without negation.
struct Natural {
  unsigned v = 0;
  static Natural zero() { return {0}; }
  static Natural one() { return {1}; }
  friend Natural operator+(Natural a, Natural b) { return {a.v + b.v}; }
  friend Natural operator*(Natural a, Natural b) { return {a.v * b.v}; }
};

TEST(Eval, MissingPrimitiveIsReported) {
  const Expr e = sin(var(0));
  EXPECT_THROW((void)eval(Valuation<Integer>{Integer(1)}, e), UnsupportedPrimitive);
  EXPECT_DOUBLE_EQ(eval(Valuation<double>{0.5}, e), std::sin(0.5));
  EXPECT_THROW((void)eval(Valuation<Natural>{Natural{2}}, -var(0)), UnsupportedPrimitive);
}

TEST(Eval, MissingValueIsAnError) {
  EXPECT_THROW((void)eval(Valuation<Integer>{Integer(1)}, var(0) * var(1)), std::out_of_range);
}

TEST(Eval, ReflectionRecoversTheExpression) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    ExprGenConfig c = testing::let_config(seed, 50, 3);
    c.trig_enabled = true;
    const Expr e = gen_expr(c);
    const Expr r = eval<Expr>([](VarId v) { return Expr::variable(v); }, e);
    ASSERT_TRUE(probe_equal(e, r)) << seed;
  }
}

// Evaluating the symbolic result of eval-at-Var equals evaluating directly.
TEST(Eval, FusionWithSymbolicEvaluation) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Expr e = gen_expr(testing::let_config(seed, 60, 4));
    const Valuation<Integer> p = testing::int_point(rng, required_arity(e));
    const Expr symbolic = eval<Expr>([](VarId v) { return Expr::variable(v); }, e);
    ASSERT_EQ(eval(p, symbolic), eval(p, e)) << seed;
  }
}

TEST(Shallow, AgreesWithReifiedProgram) {
  const auto f = generic_program<2>([]<class D>(const D& x, const D& y) { return x * y + x + one<D>(); });
  const Expr e = reify(f);
  EXPECT_EQ(pretty(e, VarRegistry(std::vector<std::string>{"x", "y"})), "x * y + x + 1");
  const auto g = generic_program<1>([]<class D>(const D& x) { return x * ((x + one<D>()) * (x + x)); });
  const auto h = generic_program<3>([]<class D>(const D& a, const D& b, const D& c) { return (a + b) * (b + c) * a; });
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Valuation<Integer> p = testing::int_point(rng, 3);
    const Valuation<Integer> p2(p.begin(), p.begin() + 2), p1(p.begin(), p.begin() + 1);
    ASSERT_EQ(apply_generic(f, p2), eval(p2, e));
    ASSERT_EQ(apply_generic(g, p1), eval(p1, reify(g)));
    ASSERT_EQ(apply_generic(h, p), eval(p, reify(h)));
  }
  EXPECT_EQ(apply_generic(f, Valuation<Integer>{Integer(5), Integer(3)}), Integer(21));
  EXPECT_THROW((void)apply_generic(f, Valuation<Integer>{Integer(1)}), std::invalid_argument);
}

}  // namespace
}  // namespace adc
