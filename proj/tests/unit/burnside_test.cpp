#include <vector>

#include "biset/burnside.hpp"
#include "biset/rational.hpp"
#include "gtest/gtest.h"
#include "test_groups.hpp"

namespace biset {
namespace {

using testing::Context;
using testing::Q;

BurnsideElement Scaled(const Rational& s, const BurnsideElement& a) { return {scale(s, a.coords)}; }

TEST(BurnsideRingTest, RegularSquare) {
  // [G/1]^2 = |G| [G/1]
  for (const char* name : {"C2", "S3", "A4", "S4"}) {
    const auto& b = Context(name)->burnside();
    auto x = b.basis(0);
    EXPECT_EQ(b.multiply(x, x), Scaled(b.lattice().group().order(), x)) << name;
  }
}

TEST(BurnsideRingTest, MultiplyMatchesBruteForce) {
  for (const char* name : {"S3", "C2xC2", "D8", "A4", "D12", "S4"}) {
    const auto& b = Context(name)->burnside();
    for (int h = 0; h < b.rank(); ++h)
      for (int k = 0; k < b.rank(); ++k)
        EXPECT_EQ(b.multiply(b.basis(h), b.basis(k)), b.multiply_bruteforce(h, k)) << name << " " << h << "," << k;
  }
}

TEST(BurnsideRingTest, TableOfMarksS3) {
  const auto& b = Context("S3")->burnside();
  // classes ordered 1, C2, C3, S3; marks[h][k] = |(G/K)^H|
  const std::vector<std::vector<long>> expected = {{6, 3, 2, 1}, {0, 1, 0, 1}, {0, 0, 2, 1}, {0, 0, 0, 1}};
  EXPECT_EQ(b.table_of_marks(), expected);
  EXPECT_EQ(b.marks(b.one()), (RVector{1, 1, 1, 1}));
}

TEST(BurnsideRingTest, MarksRoundTrip) {
  const auto& b = Context("S4")->burnside();
  for (int h = 0; h < b.rank(); ++h) {
    auto x = b.basis(h);
    EXPECT_EQ(b.from_marks(b.marks(x)), x);
    // marks of a product are the pointwise product
    auto y = b.basis((h * 7) % b.rank());
    auto mx = b.marks(x), my = b.marks(y), mxy = b.marks(b.multiply(x, y));
    for (int c = 0; c < b.rank(); ++c) EXPECT_EQ(mxy[c], mx[c] * my[c]);
  }
}

TEST(BurnsideRingTest, IdempotentOfC2) {
  // e_{C2} = [G/C2] - 1/2 [G/1]
  const auto& b = Context("C2")->burnside();
  EXPECT_EQ(b.idempotent(1).coords, (RVector{Q(-1, 2), 1}));
  EXPECT_EQ(b.idempotent(0).coords, (RVector{Q(1, 2), 0}));
}

TEST(BurnsideRingTest, PrimitiveIdempotentsAreOrthogonal) {
  for (const char* name : {"C6", "D8", "A4", "A5"}) {
    const auto& b = Context(name)->burnside();
    RVector sum(b.rank());
    for (int i = 0; i < b.rank(); ++i) {
      auto e = b.idempotent(i);
      EXPECT_EQ(b.multiply(e, e), e);
      for (int j = 0; j < i; ++j) EXPECT_TRUE(is_zero(b.multiply(e, b.idempotent(j)).coords));
      sum = add(sum, e.coords);
    }
    EXPECT_EQ(sum, b.one().coords) << name;
  }
}

TEST(BurnsideRingTest, PiIdempotents) {
  // Over Z_(2) the idempotents of B(C6) are indexed by the 2-perfect classes 1 and C3.
  auto ctx = Context("C6");
  const auto& b = ctx->burnside();
  const auto& lat = ctx->lattice();
  std::vector<unsigned long> pi = {2};
  auto residual = b.residual_classes(pi);
  RVector sum(b.rank());
  int count = 0;
  for (int c = 0; c < b.rank(); ++c) {
    if (residual[c] != c) continue;
    ++count;
    auto e = b.epsilon_pi(c, pi);
    EXPECT_EQ(b.multiply(e, e), e);
    for (const auto& q : e.coords) EXPECT_TRUE(CoefficientRing::semilocal(pi).contains(q));
    sum = add(sum, e.coords);
  }
  EXPECT_EQ(count, 2);
  EXPECT_EQ(sum, b.one().coords);
  EXPECT_EQ(lat.order(lat.class_rep(residual[b.rank() - 1])), 3);
}

TEST(BurnsideRingTest, SolvableGroupsHaveNoIntegralIdempotents) {
  // epsilon over all primes of |G|: only U^(pi) = 1 for solvable G, so 1 is primitive.
  for (const char* name : {"S3", "A4", "S4"}) {
    const auto& b = Context(name)->burnside();
    auto pi = prime_divisors(b.lattice().group().order());
    auto residual = b.residual_classes(pi);
    for (int c = 0; c < b.rank(); ++c) EXPECT_EQ(residual[c], 0) << name;
    EXPECT_EQ(b.epsilon_pi(0, pi), b.one());
  }
  const auto& a5 = Context("A5")->burnside();
  auto residual = a5.residual_classes({2, 3, 5});
  EXPECT_EQ(residual[a5.rank() - 1], a5.rank() - 1);
}

TEST(HeckeTest, RegularAction) {
  GroupPtr g = Context("S3")->group_ptr();
  std::vector<ElementSet> x = {Context("S3")->lattice().subgroup(0)};
  auto q = hecke_connectedness(g, x, CoefficientRing::rationals());
  EXPECT_EQ(q.dimension, 6);
  EXPECT_EQ(q.num_primitive_idempotents, 3);
  EXPECT_FALSE(q.connected);
  auto z = hecke_connectedness(g, x, CoefficientRing::integers());
  EXPECT_TRUE(z.in_hypothesis);
  EXPECT_TRUE(z.connected);
}

}  // namespace
}  // namespace biset
