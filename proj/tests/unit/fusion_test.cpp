#include <algorithm>
#include <map>
#include <string>

#include "biset/fusion.hpp"
#include "gtest/gtest.h"
#include "test_groups.hpp"

namespace biset {
namespace {

using testing::Group;

struct FusionCase {
  const char* group;
  unsigned long p;
};

FusionSystem Sylow(const FusionCase& c) { return FusionSystem::sylow(Group(c.group), c.p); }

TEST(FusionSystemTest, AutomizerOfTheSylow) {
  // A4 at p = 2: Aut_F(V4) = Aut_A4(V4) = C3.
  FusionSystem a4 = Sylow({"A4", 2});
  EXPECT_EQ(a4.s().order(), 4);
  int whole = a4.context()->lattice().whole();
  EXPECT_EQ(a4.aut_f(whole).size(), 3);
  EXPECT_FALSE(a4.is_inner());
  // D8 inside S4: the normal V4 has Aut_F = S3.
  FusionSystem s4 = Sylow({"S4", 2});
  ASSERT_EQ(s4.s().order(), 8);
  const auto& lat = s4.context()->lattice();
  int full_aut_count = 0;
  for (int i = 0; i < lat.size(); ++i)
    if (lat.order(i) == 4 && s4.aut_f(i).size() == 6) ++full_aut_count;
  EXPECT_EQ(full_aut_count, 1);
  EXPECT_TRUE(Sylow({"D8", 2}).is_inner());
  EXPECT_TRUE(Sylow({"S3", 3}).s().order() == 3);
}

TEST(FusionSystemTest, MorphismsAreConjugations) {
  FusionSystem fs = Sylow({"S4", 2});
  const auto& lat = fs.context()->lattice();
  const auto& g = fs.overgroup();
  for (int p = 0; p < lat.size(); ++p)
    for (const auto& phi : fs.homs_to_s(p)) {
      EXPECT_TRUE(fs.contains(phi));
      EXPECT_TRUE(phi.is_injective());
      // some element of G realises phi
      bool realised = false;
      for (Elem x = 0; x < g.order() && !realised; ++x) {
        bool all = true;
        for (Elem v : lat.subgroup(p).members())
          if (g.conj(x, fs.to_overgroup(v)) != fs.to_overgroup(phi(v))) all = false;
        realised = all;
      }
      EXPECT_TRUE(realised);
    }
}

TEST(FusionSystemTest, IsoClasses) {
  // S4 at p = 2: transpositions and double transpositions stay apart.
  FusionSystem fs = Sylow({"S4", 2});
  const auto& lat = fs.context()->lattice();
  int classes_of_order_two = 0;
  for (const auto& cls : fs.iso_classes())
    if (lat.order(cls.front()) == 2) ++classes_of_order_two;
  EXPECT_EQ(classes_of_order_two, 2);
  for (int p = 0; p < lat.size(); ++p) {
    const auto& cls = fs.iso_classes()[fs.iso_class_of(p)];
    EXPECT_NE(std::find(cls.begin(), cls.end(), p), cls.end());
  }
}

TEST(FusionAlgebraTest, Dimensions) {
  struct Case {
    FusionCase fc;
    int dim, bifree_dim;
  };
  for (Case c : {Case{{"A4", 2}, 13, 16}, Case{{"A5", 2}, 13, 16}, Case{{"S4", 2}, 11, 21}, Case{{"D8", 2}, 8, 21},
                 Case{{"Q8", 2}, 6, 17}, Case{{"C2xC2", 2}, 5, 16}}) {
    FusionSystem fs = Sylow(c.fc);
    FusionAlgebra fa = fusion_algebra(fs);
    EXPECT_EQ(fa.dimension(), c.dim) << c.fc.group;
    EXPECT_EQ(fa.bifree->dimension(), c.bifree_dim) << c.fc.group;
  }
}

TEST(FusionAlgebraTest, OneLiesInTheFusionAlgebra) {
  FusionSystem fs = Sylow({"S4", 2});
  FusionAlgebra fa = fusion_algebra(fs);
  EXPECT_EQ(fa.lift(fa.structure.one()), fa.bifree->one());
}

TEST(FusionGhostTest, SigmaIsAnInjectiveHomomorphism) {
  for (FusionCase c : {FusionCase{"C2", 2}, FusionCase{"S3", 2}, FusionCase{"S3", 3}, FusionCase{"C2xC2", 2},
                       FusionCase{"D8", 2}, FusionCase{"Q8", 2}, FusionCase{"A4", 2}, FusionCase{"A4", 3},
                       FusionCase{"S4", 2}, FusionCase{"S4", 3}, FusionCase{"D12", 2}}) {
    FusionSystem fs = Sylow(c);
    FusionAlgebra fa = fusion_algebra(fs);
    FusionGhost ghost(fs, fa);
    EXPECT_EQ(ghost.rank(), fa.dimension()) << c.group << " p=" << c.p;
    EXPECT_TRUE(ghost.is_multiplicative()) << c.group << " p=" << c.p;
    for (int i = 0; i < fa.dimension(); ++i) {
      RVector b(fa.dimension());
      b[i] = 1;
      EXPECT_TRUE(ghost.is_equivariant(ghost.sigma(b)));
    }
  }
}

TEST(FusionGhostTest, FixedNormalizationIsNotMultiplicativeForS4) {
  // Dividing every row by |C_S(P)| breaks multiplicativity once phi(P) has a different centralizer.
  FusionSystem fs = Sylow({"S4", 2});
  FusionAlgebra fa = fusion_algebra(fs);
  FusionGhost ghost(fs, fa);
  EXPECT_TRUE(ghost.is_multiplicative(FusionNormalization::PerRow));
  EXPECT_FALSE(ghost.is_multiplicative(FusionNormalization::Fixed));
}

TEST(FusionCenterTest, ConnectedOverZ) {
  for (FusionCase c : {FusionCase{"S4", 2}, FusionCase{"A4", 2}, FusionCase{"D8", 2}, FusionCase{"Q8", 2},
                       FusionCase{"S3", 3}, FusionCase{"A4", 3}}) {
    FusionSystem fs = Sylow(c);
    FusionAlgebra fa = fusion_algebra(fs);
    FusionCenterReport r = fusion_center_connected(fs, fa, CoefficientRing::integers());
    EXPECT_TRUE(r.hypothesis) << c.group;
    EXPECT_TRUE(r.connected) << c.group << " p=" << c.p;
    EXPECT_EQ(r.dimension, fa.dimension());
  }
}

TEST(FusionCenterTest, A4CenterHasANonSplitComponent) {
  FusionSystem fs = Sylow({"A4", 2});
  FusionAlgebra fa = fusion_algebra(fs);
  FusionCenterReport r = fusion_center_connected(fs, fa, CoefficientRing::integers());
  EXPECT_EQ(r.center_dimension, 5);
  EXPECT_EQ(r.primitive_idempotents.size(), 4u);
  EXPECT_TRUE(r.connected);
}

TEST(FusionCenterTest, IndicesAreClassInvariants) {
  for (FusionCase c : {FusionCase{"S4", 2}, FusionCase{"A4", 2}, FusionCase{"D8", 2}, FusionCase{"A5", 2}}) {
    FusionSystem fs = Sylow(c);
    EXPECT_TRUE(fusion_indices_invariant(fs)) << c.group;
    EXPECT_TRUE(fusion_hypothesis(fs, CoefficientRing::integers()));
  }
  // A4 at p = 2: [Aut_F(V4) : Aut_S(V4)] = 3 is a unit in Z_(2).
  FusionSystem a4 = Sylow({"A4", 2});
  auto idx = fusion_indices(a4, a4.context()->lattice().whole());
  ASSERT_FALSE(idx.empty());
  for (long i : idx) EXPECT_EQ(i, 3);
  EXPECT_FALSE(fusion_hypothesis(a4, CoefficientRing::semilocal({2})));
  EXPECT_TRUE(fusion_hypothesis(a4, CoefficientRing::semilocal({2, 3})));
  EXPECT_TRUE(fusion_hypothesis(Sylow({"D8", 2}), CoefficientRing::semilocal({2})));
}

TEST(FusionCenterTest, SlowA5AtAllPrimes) {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    FusionSystem fs = Sylow({"A5", p});
    FusionAlgebra fa = fusion_algebra(fs);
    FusionGhost ghost(fs, fa);
    EXPECT_EQ(ghost.rank(), fa.dimension());
    EXPECT_TRUE(fusion_center_connected(fs, fa, CoefficientRing::integers()).connected) << p;
  }
}

}  // namespace
}  // namespace biset
