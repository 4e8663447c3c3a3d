#include <gtest/gtest.h>

#include <limits>

#include "adc/counted.hpp"
#include "adc/laws.hpp"
#include "adc/nagata.hpp"
#include "adc/probe.hpp"
#include "adc/tangent/dense.hpp"
#include "adc/tangent/sparse.hpp"
#include "support.hpp"

namespace adc {
namespace {

using testing::small_int;
using testing::small_rational;

void expect_all_pass(const LawReport& r, std::size_t laws) {
  ASSERT_EQ(r.laws.size(), laws);
  for (const auto& l : r.laws) EXPECT_TRUE(l.passed) << l.name << ": " << l.counterexample;
}

SparseTangent<Integer> small_sparse(std::mt19937_64& rng) {
  SparseTangent<Integer>::Map m;
  const int n = static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) m[VarId{static_cast<std::uint32_t>(rng() % 6)}] = small_int(rng);
  return SparseTangent<Integer>(std::move(m));
}

DenseTangent<Integer> small_dense(std::mt19937_64& rng) {
  std::vector<Integer> c(rng() % 5);
  for (auto& x : c) x = small_int(rng);
  return DenseTangent<Integer>(std::move(c));
}

TEST(SemiringLaws, Integer) { expect_all_pass(check_semiring_laws<Integer>(small_int, 500, 3), 8); }

TEST(SemiringLaws, Rational) { expect_all_pass(check_semiring_laws<Rational>(small_rational, 500, 4), 8); }

TEST(SemiringLaws, NagataOverSparse) {
  using N = Nagata<Integer, SparseTangent<Integer>>;
  auto gen = [](std::mt19937_64& rng) { return N(small_int(rng), small_sparse(rng)); };
  expect_all_pass(check_semiring_laws<N>(gen, 500, 5), 8);
}

TEST(SemiringLaws, DualOverRational) {
  auto gen = [](std::mt19937_64& rng) { return Dual<Rational>(small_rational(rng), small_rational(rng)); };
  expect_all_pass(check_semiring_laws<Dual<Rational>>(gen, 300, 6), 8);
}

TEST(SemiringLaws, ProbeField) {
  auto gen = [](std::mt19937_64& rng) { return ProbeField(rng()); };
  expect_all_pass(check_semiring_laws<ProbeField>(gen, 500, 7), 8);
}

TEST(SemiringLaws, ExpressionsUpToProbing) {
  auto gen = [](std::mt19937_64& rng) { return gen_expr(testing::polynomial_config(rng(), 9, 3)); };
  auto eq = [](const Expr& a, const Expr& b) { return probe_equal(a, b); };
  expect_all_pass(check_semiring_laws<Expr>(gen, 200, 8, eq), 8);
}

// Truncating average is commutative but not associative.
struct Avg {
  int v = 0;
  static Avg zero() { return {0}; }
  static Avg one() { return {1}; }
  friend Avg operator+(Avg a, Avg b) { return {(a.v + b.v) / 2}; }
  friend Avg operator*(Avg a, Avg b) { return {a.v * b.v}; }
  friend bool operator==(Avg, Avg) = default;
};

TEST(SemiringLaws, ReportsCounterexample) {
  auto gen = [](std::mt19937_64& rng) { return Avg{static_cast<int>(rng() % 50)}; };
  const LawReport r = check_semiring_laws<Avg>(gen, 100, 9);
  EXPECT_FALSE(r.all_passed());
  ASSERT_NE(r.find("additive associativity"), nullptr);
  EXPECT_FALSE(r.find("additive associativity")->passed);
  EXPECT_TRUE(r.find("additive commutativity")->passed);
}

TEST(ModuleLaws, Dense) {
  expect_all_pass(check_module_laws<DenseTangent<Integer>, Integer>(small_dense, small_int, 500, 10), 7);
}

TEST(ModuleLaws, Sparse) {
  expect_all_pass(check_module_laws<SparseTangent<Integer>, Integer>(small_sparse, small_int, 500, 11), 7);
}

TEST(ModuleLaws, ScalarOverItself) {
  expect_all_pass(check_module_laws<Rational, Rational>(small_rational, small_rational, 500, 12), 7);
}

TEST(Integer, WrapsOnOverflow) {
  const Integer max(std::numeric_limits<std::int64_t>::max());
  EXPECT_EQ((max + Integer(1)).value(), std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ((Integer(-3) * Integer(7)).value(), -21);
  EXPECT_EQ((-Integer(5)).value(), -5);
}

TEST(Rational, LowestTermsAndPrinting) {
  EXPECT_EQ(Rational(6, 4).to_string(), "3/2");
  EXPECT_EQ(Rational(-6, -3).to_string(), "2");
  EXPECT_EQ(Rational(3, -9).to_string(), "-1/3");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Dual, ProductRule) {
  const Dual<Integer> a(Integer(3), Integer(2)), b(Integer(5), Integer(7));
  const Dual<Integer> p = a * b;
  EXPECT_EQ(p.pri, Integer(15));
  EXPECT_EQ(p.tan, Integer(3 * 7 + 2 * 5));
}

TEST(Nagata, TangentScalesByOtherPrimal) {
  using N = Nagata<Integer, SparseTangent<Integer>>;
  const N a(Integer(3), SparseTangent<Integer>::delta(VarId{0}));
  const N b(Integer(4), SparseTangent<Integer>::delta(VarId{1}));
  const N p = a * b;
  EXPECT_EQ(p.pri, Integer(12));
  EXPECT_EQ(p.tan, (SparseTangent<Integer>{{VarId{0}, Integer(4)}, {VarId{1}, Integer(3)}}));
}

TEST(Counted, CountsWithoutChangingValues) {
  OpCounter c;
  Counted<Integer> r;
  {
    CountingScope scope(c);
    r = (Counted<Integer>(Integer(2)) + Counted<Integer>(Integer(3))) * Counted<Integer>(Integer(4));
  }
  EXPECT_EQ(r.value(), Integer(20));
  EXPECT_EQ(c.adds, 1u);
  EXPECT_EQ(c.muls, 1u);
  const Counted<Integer> outside = Counted<Integer>(Integer(2)) * Counted<Integer>(Integer(2));
  EXPECT_EQ(outside.value(), Integer(4));
  EXPECT_EQ(c.muls, 1u);
}

TEST(Counted, NagataPrimalWorkIsTagged) {
  using N = Nagata<Counted<Integer>, Counted<Integer>>;
  OpCounter c;
  {
    CountingScope scope(c);
    (void)(N(Integer(2), Integer(1)) * N(Integer(3), Integer(0)));
  }
  EXPECT_EQ(c.primal_muls, 1u);
  EXPECT_EQ(c.muls, 3u);
  EXPECT_EQ(c.adds, 1u);
}

}  // namespace
}  // namespace adc
