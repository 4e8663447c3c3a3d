#include <gtest/gtest.h>

#include "adc/counted.hpp"
#include "adc/iso_laws.hpp"
#include "support.hpp"

namespace adc {
namespace {

using testing::small_int;
using I = Integer;
using Sparse = SparseTangent<I>;
using Cayley = CayleyHom<Sparse>;

constexpr std::size_t kArity = 6;

void expect_all_pass(const LawReport& r) {
  ASSERT_EQ(r.laws.size(), 6u);
  for (const auto& l : r.laws) EXPECT_TRUE(l.passed) << l.name << ": " << l.counterexample;
}

Sparse random_sparse(std::mt19937_64& rng) {
  Sparse::Map m;
  const int n = static_cast<int>(rng() % 5);
  for (int i = 0; i < n; ++i) m[VarId{static_cast<std::uint32_t>(rng() % kArity)}] = small_int(rng);
  return Sparse(std::move(m));
}

TEST(IsoLaws, Sparse) { expect_all_pass(check_iso_laws<Sparse, I>(small_int, kArity, 500, 21)); }

TEST(IsoLaws, LinearHomOverSparse) {
  expect_all_pass(check_iso_laws<LinearHom<I, Sparse>, I>(small_int, kArity, 500, 22));
}

TEST(IsoLaws, LinearHomOverCayley) {
  expect_all_pass(check_iso_laws<LinearHom<I, Cayley>, I>(small_int, kArity, 500, 23));
}

TEST(IsoLaws, LinearHomOverMutableCells) {
  expect_all_pass(check_iso_laws<LinearHom<I, MutAction<I>>, I>(small_int, kArity, 500, 24));
}

TEST(IsoLaws, OverRationals) {
  expect_all_pass(check_iso_laws<LinearHom<Rational, CayleyHom<SparseTangent<Rational>>>, Rational>(
      testing::small_rational, 4, 200, 25));
}

TEST(Sparse, NormalizedEquality) {
  EXPECT_EQ(Sparse({{VarId{0}, I(0)}, {VarId{1}, I(2)}}), Sparse({{VarId{1}, I(2)}}));
  EXPECT_NE(Sparse({{VarId{1}, I(3)}}), Sparse({{VarId{1}, I(2)}}));
  EXPECT_EQ(Sparse({{VarId{4}, I(0)}}), Sparse::zero());
}

// Each produced entry costs one touch plus the hinted-insert comparisons,
// so a merge stays linear in the output size.
TEST(Sparse, MergeCostIsLinear) {
  const Sparse a{{VarId{0}, I(1)}, {VarId{2}, I(1)}};
  const Sparse b{{VarId{1}, I(1)}, {VarId{2}, I(1)}};
  OpCounter c;
  Sparse s;
  {
    CountingScope scope(c);
    s = a + b;
  }
  EXPECT_EQ(s, (Sparse{{VarId{0}, I(1)}, {VarId{1}, I(1)}, {VarId{2}, I(2)}}));
  EXPECT_GE(c.touches, 3u);
  for (std::uint32_t n : {100u, 1000u}) {
    Sparse::Map ma, mb;
    for (std::uint32_t i = 0; i < n; ++i) {
      ma[VarId{2 * i}] = I(1);
      mb[VarId{2 * i + 1}] = I(1);
    }
    const Sparse x(std::move(ma)), y(std::move(mb));
    OpCounter big;
    {
      CountingScope scope(big);
      (void)(x + y);
    }
    EXPECT_GE(big.touches, 2u * n);
    EXPECT_LE(big.touches, 6u * n);
  }
}

TEST(Cayley, AbsIsAMonoidMorphism) {
  std::mt19937_64 rng(31);
  EXPECT_EQ(cayley_abs(Cayley::zero()), Sparse::zero());
  for (int i = 0; i < 500; ++i) {
    const Sparse a = random_sparse(rng), b = random_sparse(rng), c = random_sparse(rng);
    const Cayley f = cayley_rep(a) + cayley_rep(b);
    const Cayley g = cayley_rep(c);
    ASSERT_EQ(cayley_abs(f + g), cayley_abs(f) + cayley_abs(g));
    ASSERT_EQ(cayley_abs(cayley_rep(a)), a);
    ASSERT_EQ(f.apply(c), a + b + c);
  }
}

TEST(Cayley, LongCompositionsRunIteratively) {
  Cayley f;
  for (int i = 0; i < 200000; ++i) f = f + cayley_rep(Sparse::singleton(VarId{static_cast<std::uint32_t>(i % 3)}, I(1)));
  EXPECT_EQ(f.abs(), (Sparse{{VarId{0}, I(66667)}, {VarId{1}, I(66667)}, {VarId{2}, I(66666)}}));
}

// Replaying modify_at calls on cells agrees with insert-with-add on a map.
TEST(MutAccum, MatchesMapModel) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    MutAccum<I> cells(kArity);
    Sparse model;
    MutAction<I> program;
    const int steps = static_cast<int>(rng() % 20);
    for (int s = 0; s < steps; ++s) {
      const VarId v{static_cast<std::uint32_t>(rng() % kArity)};
      const I d = small_int(rng);
      cells.modify_at(v, [&](const I& x) { return x + d; });
      model.insert_with_add(v, d);
      program = program + MutAction<I>::add_at(v, d);
    }
    ASSERT_EQ(cells.consume(), model);
    ASSERT_EQ(mut_run(program, kArity), model);
  }
}

TEST(MutAccum, HandleIsSingleUse) {
  MutAccum<I> cells(3);
  cells.add_at(VarId{1}, I(4));
  EXPECT_EQ(cells.read(VarId{1}), I(4));
  EXPECT_EQ(cells.take(VarId{1}), I(4));
  EXPECT_EQ(cells.read(VarId{1}), I(0));
  cells.write(VarId{2}, I(7));
  EXPECT_EQ(cells.consume(), (Sparse{{VarId{2}, I(7)}}));
  EXPECT_TRUE(cells.consumed());
  EXPECT_THROW(cells.add_at(VarId{0}, I(1)), ConsumedHandle);
  EXPECT_THROW((void)cells.consume(), ConsumedHandle);
  MutAccum<I> small(2);
  EXPECT_THROW(small.add_at(VarId{5}, I(1)), std::out_of_range);
}

TEST(MutAccum, CountsTouches) {
  OpCounter c;
  {
    CountingScope scope(c);
    MutAccum<I> cells(10);
    cells.add_at(VarId{3}, I(1));
    (void)cells.consume();
  }
  EXPECT_EQ(c.touches, 10u + 2u + 10u);
}

// f(x ⊗ y) = x • f(y) for maps built from the constructors.
TEST(LinearHom, Homogeneity) {
  using L = LinearHom<I, Sparse>;
  std::mt19937_64 rng(51);
  for (int i = 0; i < 500; ++i) {
    L f = L::rep(random_sparse(rng));
    f = f + scale(small_int(rng), L::delta(VarId{static_cast<std::uint32_t>(rng() % kArity)}, kArity));
    f = scale(small_int(rng), f) + L::rep(random_sparse(rng));
    if (rng() % 2) f = L::let_in(VarId{2}, L::rep(random_sparse(rng)), f, kArity);
    const I x = small_int(rng), y = small_int(rng);
    ASSERT_EQ(f.apply(x * y), scale(x, f.apply(y)));
    ASSERT_EQ(f.apply(I(0)), Sparse::zero());
  }
}

TEST(LinearHom, ThreadedRunnersAgreeWithApply) {
  using LC = LinearHom<I, Cayley>;
  using LM = LinearHom<I, MutAction<I>>;
  std::mt19937_64 rng(61);
  for (int i = 0; i < 300; ++i) {
    const Sparse a = random_sparse(rng), b = random_sparse(rng);
    const I s = small_int(rng);
    const VarId y{static_cast<std::uint32_t>(rng() % kArity)};
    const LC fc = LC::let_in(y, LC::rep(cayley_rep(a)), scale(s, LC::rep(cayley_rep(b)) + LC::delta(y, kArity)), kArity);
    const LM fm = LM::let_in(y, LM::rep(MutAction<I>::from_sparse(a)),
                             scale(s, LM::rep(MutAction<I>::from_sparse(b)) + LM::delta(y, kArity)), kArity);
    const Sparse expected = cayley_abs(fc.apply(I(1)));
    ASSERT_EQ(IsoWitness<LC>::to_sparse(fc, kArity), expected);
    ASSERT_EQ(IsoWitness<LM>::to_sparse(fm, kArity), expected);
  }
}

TEST(LetOps, PurgeRemovesOnlyTheBinder) {
  const Sparse t{{VarId{0}, I(3)}, {VarId{1}, I(5)}};
  EXPECT_EQ(LetOps<Sparse>::component(t, VarId{1}, 2), I(5));
  EXPECT_EQ(LetOps<Sparse>::purge(t, VarId{1}, 2), (Sparse{{VarId{0}, I(3)}}));
  const DenseTangent<I> d{I(3), I(5)};
  EXPECT_EQ(LetOps<DenseTangent<I>>::purge(d, VarId{0}, 2), (DenseTangent<I>{I(0), I(5)}));
}

}  // namespace
}  // namespace adc
