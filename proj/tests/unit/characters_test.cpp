#include <algorithm>
#include <vector>

#include "biset/characters.hpp"
#include "biset/cyclotomic.hpp"
#include "biset/positivity.hpp"
#include "gtest/gtest.h"
#include "test_groups.hpp"

namespace biset {
namespace {

using testing::Context;
using testing::Group;
using testing::Q;

std::vector<Rational> Sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(CyclotomicTest, Arithmetic) {
  Cyclotomic w = Cyclotomic::zeta(3);
  EXPECT_EQ(w + Cyclotomic::zeta(3, 2), Cyclotomic(-1));
  EXPECT_EQ(w * w * w, Cyclotomic(1));
  EXPECT_EQ(w.conj(), Cyclotomic::zeta(3, 2));
  EXPECT_TRUE((Cyclotomic::zeta(4) * Cyclotomic::zeta(4)).is_rational());
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
}

TEST(CharacterTableTest, DegreesAndOrthogonality) {
  for (const char* name : {"C4", "S3", "D8", "Q8", "A4", "S4", "A5"}) {
    GroupPtr g = Group(name);
    auto irr = character_table(g);
    EXPECT_EQ(irr.size(), g->classes().size()) << name;
    Rational sum = 0;
    for (const auto& chi : irr) sum += chi.degree().rational() * chi.degree().rational();
    EXPECT_EQ(sum, g->order()) << name;
    for (std::size_t i = 0; i < irr.size(); ++i)
      for (std::size_t j = 0; j < irr.size(); ++j)
        EXPECT_EQ(inner_product(irr[i], irr[j]), Cyclotomic(i == j ? 1 : 0)) << name;
    EXPECT_EQ(irr.front(), ClassFunction::trivial(g));
  }
}

TEST(CharacterTableTest, ProductsDecompose) {
  GroupPtr g = Group("S4");
  auto irr = character_table(g);
  for (const auto& a : irr)
    for (const auto& b : irr) {
      ClassFunction p = a * b;
      Cyclotomic deg = 0;
      for (const auto& c : irr) {
        Cyclotomic m = inner_product(p, c);
        ASSERT_TRUE(m.is_rational());
        EXPECT_GE(m.rational(), 0);
        EXPECT_EQ(m.rational().get_den(), 1);
        deg += m * c.degree();
      }
      EXPECT_EQ(deg, p.degree());
    }
}

TEST(RationalCharacterTableTest, C3OrbitSum) {
  RationalCharacterTable t(Group("C3"));
  ASSERT_EQ(t.num_orbits(), 2);
  EXPECT_EQ(t.orbit_size(1), 2);
  EXPECT_EQ(Sorted(t.values(1)), (std::vector<Rational>{-1, -1, 2}));
  EXPECT_EQ(t.member_degree(1), 1);
}

TEST(RationalCharacterTableTest, OrbitCounts) {
  // Rational irreducibles = classes of cyclic subgroups.
  const std::map<std::string, int> expected = {{"C4", 3}, {"C12", 6}, {"Q8", 5}, {"A4", 3}, {"A5", 4}, {"S4", 5}};
  for (const auto& [name, n] : expected) EXPECT_EQ(RationalCharacterTable(Group(name)).num_orbits(), n) << name;
}

TEST(RationalCharacterTableTest, CentralIdempotents) {
  for (const char* name : {"C6", "S3", "Q8", "A4"}) {
    GroupPtr g = Group(name);
    RationalCharacterTable t(g);
    std::vector<Rational> total(g->order());
    for (int i = 0; i < t.num_orbits(); ++i) {
      auto e = t.central_idempotent(i);
      EXPECT_EQ(group_algebra_multiply(*g, e, e), e) << name;
      for (int j = 0; j < i; ++j)
        EXPECT_EQ(group_algebra_multiply(*g, e, t.central_idempotent(j)), std::vector<Rational>(g->order()));
      for (int x = 0; x < g->order(); ++x) total[x] += e[x];
      EXPECT_EQ(t.find_orbit(t.values(i)), i);
    }
    std::vector<Rational> one(g->order());
    one[g->identity()] = 1;
    EXPECT_EQ(total, one) << name;
  }
}

TEST(RationalCharacterTableTest, OutOfKleinFourGroup) {
  // Out(C2xC2) is S3; its degree-two idempotent has coefficients (2/6)(2,-1,-1,0,0,0).
  auto ctx = Context("C2xC2");
  const auto& lat = ctx->lattice();
  const auto& t = ctx->out_table(lat.whole());
  ASSERT_EQ(t.group()->order(), 6);
  int st = -1;
  for (int i = 0; i < t.num_orbits(); ++i)
    if (t.member_degree(i) == 2) st = i;
  ASSERT_GE(st, 0);
  auto e = t.central_idempotent(st);
  EXPECT_EQ(e[t.group()->identity()], Q(2, 3));
  EXPECT_EQ(Sorted(e), (std::vector<Rational>{Q(-1, 3), Q(-1, 3), 0, 0, 0, Q(2, 3)}));
}

TEST(SubgroupCharacterTest, InductionFromC2ToS3) {
  auto ctx = Context("S3");
  const auto& lat = ctx->lattice();
  GroupPtr g = ctx->group_ptr();
  int c2 = lat.class_rep(1);
  ASSERT_EQ(lat.order(c2), 2);
  auto ind = induce_to(SubgroupCharacter::trivial(g, lat.subgroup(c2)), g->all());
  RationalCharacterTable t(g);
  // ind 1 = 1 + St
  for (int i = 0; i < t.num_orbits(); ++i) {
    auto chi = SubgroupCharacter::from_orbit_sum(t, i);
    Rational m = inner_product(ind, chi);
    if (t.member_degree(i) == 1 && t.value(i, lat.subgroup(c2).members()[1]) == -1) EXPECT_EQ(m, 0);
    else EXPECT_EQ(m, 1);
  }
}

TEST(SubgroupCharacterTest, FrobeniusReciprocity) {
  auto ctx = Context("A4");
  const auto& lat = ctx->lattice();
  GroupPtr g = ctx->group_ptr();
  RationalCharacterTable t(g);
  for (int h : lat.conj_class_reps()) {
    auto triv = SubgroupCharacter::trivial(g, lat.subgroup(h));
    for (int i = 0; i < t.num_orbits(); ++i) {
      auto chi = SubgroupCharacter::from_orbit_sum(t, i);
      EXPECT_EQ(inner_product(induce_to(triv, g->all()), chi), inner_product(triv, restrict_to(chi, lat.subgroup(h))));
    }
  }
}

TEST(PositivityTest, SweepHasNoFailures) {
  for (const char* name : {"S3", "C2xC2", "D8", "Q8", "A4", "D12"}) {
    PositivityReport r = positivity_sweep(Context(name)->lattice());
    EXPECT_TRUE(r.ok()) << name << ": " << (r.counterexamples.empty() ? "" : r.counterexamples.front());
    EXPECT_GT(r.nonnegative_checks, 0);
    EXPECT_GT(r.coset_checks, 0);
    EXPECT_GT(r.double_coset_checks, 0);
  }
}

TEST(PositivityTest, SubgroupSumsAreNonNegative) {
  // chi(B^+) = |B| (res chi, 1), independently of the sweep.
  auto ctx = Context("S4");
  const auto& lat = ctx->lattice();
  RationalCharacterTable t(ctx->group_ptr());
  for (int b = 0; b < lat.size(); ++b)
    for (int i = 0; i < t.num_orbits(); ++i) {
      Rational s = 0;
      for (Elem x : lat.subgroup(b).members()) s += t.value(i, x);
      Rational m = s / lat.order(b);
      EXPECT_GE(m, 0);
      EXPECT_EQ(m.get_den(), 1);
    }
}

}  // namespace
}  // namespace biset
