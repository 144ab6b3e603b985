#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "biset/blocks.hpp"
#include "biset/center.hpp"
#include "biset/verify.hpp"
#include "gtest/gtest.h"
#include "test_groups.hpp"

namespace biset {
namespace {

using testing::Context;

// |E| for each catalog group, from counting rational irreducibles of Out(U) in Q Injbar(U, G).
const std::map<std::string, int>& PairCounts() {
  static const std::map<std::string, int> counts = {
      {"C2", 2}, {"C4", 4}, {"S3", 4},   {"C2xC2", 5}, {"C6", 6},  {"D8", 7},   {"Q8", 6},
      {"A4", 8}, {"C12", 12}, {"S4", 11}, {"D12", 10}, {"C2^3", 10}, {"A5", 14}};
  return counts;
}

std::multiset<int> BlockSizes(const BlockPartition& bp) {
  std::multiset<int> sizes;
  for (const auto& b : bp.blocks) sizes.insert(int(b.pairs.size()));
  return sizes;
}

TEST(EGPairsTest, Counts) {
  for (const auto& [name, n] : PairCounts()) {
    if (name == "A5") continue;
    EXPECT_EQ(int(compute_EG(*Context(name)).size()), n) << name;
  }
}

TEST(EGPairsTest, SlowA5Count) { EXPECT_EQ(int(compute_EG(*Context("A5")).size()), 14); }

TEST(EGPairsTest, MultiplicityIsPositiveExactlyOnPairs) {
  auto ctx = Context("D8");
  const auto& lat = ctx->lattice();
  auto pairs = compute_EG(*ctx);
  int count = 0;
  for (int k = 0; k < lat.num_iso_classes(); ++k) {
    int u = lat.iso_rep(k);
    for (int chi = 0; chi < ctx->out_table(u).num_orbits(); ++chi) {
      bool in = injbar_multiplicity(*ctx, k, chi) > 0;
      bool listed = std::any_of(pairs.begin(), pairs.end(), [&](const EGPair& p) { return p.u == u && p.chi == chi; });
      EXPECT_EQ(in, listed);
      count += in;
    }
  }
  EXPECT_EQ(count, int(pairs.size()));
}

TEST(BifreeBlocksTest, RationalBlocksArePrimitive) {
  for (const auto& [name, n] : PairCounts()) {
    if (name == "A5" || name == "C2^3") continue;
    auto ctx = Context(name);
    BlockPartition bp = bifree_blocks(*ctx, CoefficientRing::rationals());
    EXPECT_EQ(int(bp.blocks.size()), n) << name;
    EXPECT_TRUE(bp.checks.all()) << name;
    // the center oracle finds the same number of primitive central idempotents
    auto center = center_oracle(bp.algebra->structure(), 4000);
    EXPECT_EQ(int(center.primitive_idempotents.size()), n) << name;
  }
}

TEST(BifreeBlocksTest, IntegralBlocksOfSolvableGroups) {
  for (const char* name : {"C2", "C4", "S3", "C2xC2", "C6", "D8", "Q8", "A4", "C12", "D12", "S4"}) {
    BlockPartition bp = bifree_blocks(*Context(name), CoefficientRing::integers());
    EXPECT_EQ(bp.blocks.size(), 1u) << name;
    EXPECT_TRUE(bp.checks.all()) << name;
  }
}

TEST(BifreeBlocksTest, SlowIntegralBlocksOfA5) {
  auto ctx = Context("A5");
  BlockPartition bp = bifree_blocks(*ctx, CoefficientRing::integers());
  ASSERT_EQ(bp.blocks.size(), 2u);
  EXPECT_TRUE(bp.checks.all());
  // one block holds exactly the two pairs on A5 itself
  std::multiset<int> sizes = BlockSizes(bp);
  EXPECT_EQ(sizes, (std::multiset<int>{2, 12}));
  for (const auto& b : bp.blocks) {
    if (b.pairs.size() != 2) continue;
    for (int i : b.pairs) EXPECT_EQ(ctx->lattice().order(bp.pairs[i].u), 60);
  }
}

TEST(BifreeBlocksTest, SemilocalRings) {
  // Over Z_(2) the group C6 splits by the 2-perfect part of U.
  auto ctx = Context("C6");
  BlockPartition bp = bifree_blocks(*ctx, CoefficientRing::semilocal({2}));
  EXPECT_TRUE(bp.checks.idempotent && bp.checks.central && bp.checks.sum_to_one && bp.checks.integrality);
  EXPECT_EQ(bp.blocks.size(), 2u);
  // Out(V4) = S3 has the prime 3, a unit in Z_(2).
  EXPECT_FALSE(bifree_blocks(*Context("D8"), CoefficientRing::semilocal({2})).checks.hypothesis);
  for (const char* name : {"C4", "C8"}) {
    BlockPartition q = bifree_blocks(*Context(name), CoefficientRing::semilocal({2}));
    EXPECT_TRUE(q.checks.hypothesis) << name;
    EXPECT_TRUE(q.checks.all()) << name;
    EXPECT_EQ(q.blocks.size(), 1u) << name;
  }
}

TEST(LeftFreeBlocksTest, RationalBlockCounts) {
  const std::map<std::string, int> expected = {{"C2", 1}, {"C4", 2}, {"S3", 1},  {"C2xC2", 2}, {"C6", 2},  {"D8", 1},
                                               {"Q8", 2}, {"A4", 3}, {"C12", 4}, {"S4", 1},    {"D12", 1}};
  for (const auto& [name, n] : expected) {
    BlockPartition bp = leftfree_blocks(*Context(name), CoefficientRing::rationals());
    EXPECT_EQ(int(bp.blocks.size()), n) << name;
    EXPECT_TRUE(bp.checks.all()) << name;
    EXPECT_TRUE(bp.center_in_bifree) << name;
    EXPECT_EQ(bp.center_primitives, n) << name;
  }
}

TEST(LeftFreeBlocksTest, PartitionOfC4) {
  BlockPartition bp = leftfree_blocks(*Context("C4"), CoefficientRing::rationals());
  ASSERT_EQ(bp.blocks.size(), 2u);
  EXPECT_EQ(BlockSizes(bp), (std::multiset<int>{1, 3}));
  for (const auto& b : bp.blocks) {
    if (b.pairs.size() != 1) continue;
    const EGPair& p = bp.pairs[b.pairs.front()];
    EXPECT_EQ(bp.algebra->lattice().order(p.u), 4);
    EXPECT_NE(p.chi, 0);
  }
}

TEST(LeftFreeBlocksTest, PartitionOfKleinFourGroup) {
  // The Steinberg-type pair of Out(V4) = S3 is linked to everything except the sign pair.
  BlockPartition bp = leftfree_blocks(*Context("C2xC2"), CoefficientRing::rationals());
  ASSERT_EQ(bp.blocks.size(), 2u);
  EXPECT_EQ(BlockSizes(bp), (std::multiset<int>{1, 4}));
  for (const auto& b : bp.blocks) {
    if (b.pairs.size() != 1) continue;
    const EGPair& p = bp.pairs[b.pairs.front()];
    EXPECT_EQ(bp.algebra->lattice().order(p.u), 4);
    const auto& t = Context("C2xC2")->out_table(p.u);
    EXPECT_EQ(t.member_degree(p.chi), 1);
    EXPECT_NE(p.chi, 0);
  }
}

TEST(LeftFreeBlocksTest, IntegralBlocksAreConnected) {
  for (const char* name : {"C2", "C4", "S3", "C2xC2", "C6", "D8", "Q8", "A4", "C12", "D12"}) {
    BlockPartition bp = leftfree_blocks(*Context(name), CoefficientRing::integers());
    EXPECT_EQ(bp.blocks.size(), 1u) << name;
    EXPECT_TRUE(bp.checks.all()) << name;
  }
}

TEST(LeftFreeBlocksTest, SlowElementaryAbelianOfOrderEight) {
  BlockPartition bp = leftfree_blocks(*Context("C2^3"), CoefficientRing::rationals());
  EXPECT_EQ(bp.blocks.size(), 3u);
  EXPECT_TRUE(bp.checks.all());
  EXPECT_TRUE(bp.center_in_bifree);
}

TEST(RelationTest, DirectMatchesCharacterCriterion) {
  for (const char* name : {"C2", "C4", "S3", "C2xC2", "C6", "D8", "Q8", "A4", "C12"}) {
    auto ctx = Context(name);
    auto pairs = compute_EG(*ctx);
    DirectRelation direct(*ctx, pairs);
    for (int p = 0; p < int(pairs.size()); ++p)
      for (int q = 0; q < int(pairs.size()); ++q) {
        bool by_char = relation_character(*ctx, pairs[p], pairs[q]);
        EXPECT_EQ(direct.related(p, q), by_char) << name << " " << pairs[p].label << " " << pairs[q].label;
        EXPECT_EQ(relation_character(*ctx, pairs[p], pairs[q], false), by_char);
        EXPECT_GE(direct.dimension(p, q), 0);
      }
  }
}

TEST(RelationTest, DiagonalIsNonzero) {
  auto ctx = Context("A4");
  auto pairs = compute_EG(*ctx);
  DirectRelation direct(*ctx, pairs);
  for (int p = 0; p < int(pairs.size()); ++p) EXPECT_GT(direct.dimension(p, p), 0);
}

TEST(RelationTest, LAlphaMatchesBruteForce) {
  auto ctx = Context("D8");
  const auto& lat = ctx->lattice();
  for (int vp = 0; vp < lat.size(); ++vp)
    for (int v = 0; v < lat.size(); ++v) {
      if (lat.order(vp) % lat.order(v) != 0 || lat.order(vp) > 4) continue;
      for (const auto& alpha : epimorphisms(*ctx, vp, v, false)) {
        LAlphaData l = build_l_alpha(*ctx, v, vp, alpha);
        auto brute = l_alpha_bruteforce(*ctx, v, vp, alpha);
        auto fast = l.l_alpha;
        std::sort(fast.begin(), fast.end());
        std::sort(brute.begin(), brute.end());
        EXPECT_EQ(fast, brute);
      }
    }
}

TEST(RelationTest, TrivialOutGEquivalences) {
  // In C4 every Out_G is trivial, so all four formulations apply.
  auto ctx = Context("C4");
  const auto& lat = ctx->lattice();
  int checked = 0;
  for (int vp = 0; vp < lat.size(); ++vp)
    for (int v = 0; v < lat.size(); ++v)
      for (const auto& alpha : epimorphisms(*ctx, vp, v, true)) {
        LAlphaData l = build_l_alpha(*ctx, v, vp, alpha);
        const auto& tv = ctx->out_table(v);
        const auto& tvp = ctx->out_table(vp);
        for (int a = 0; a < tv.num_orbits(); ++a)
          for (int b = 0; b < tvp.num_orbits(); ++b) {
            OutGEquivalences e = trivial_outg_equivalences(*ctx, l, tv.values(a), tvp.values(b));
            EXPECT_TRUE(e.agree());
            ++checked;
          }
      }
  EXPECT_GT(checked, 0);
}

TEST(ElementaryAbelianTest, UnipotentPairsFormAClass) {
  for (auto [p, n] : {std::pair{2, 2}, std::pair{3, 2}}) {
    ElementaryAbelianReport r = elementary_abelian_report(p, n);
    EXPECT_TRUE(r.agree) << p << "^" << n;
    EXPECT_TRUE(r.unipotent_is_class) << p << "^" << n;
    EXPECT_EQ(r.relation, r.parabolic);
  }
}

TEST(ElementaryAbelianTest, SlowRankThree) {
  ElementaryAbelianReport r = elementary_abelian_report(2, 3);
  EXPECT_TRUE(r.agree);
  EXPECT_TRUE(r.unipotent_is_class);
}

TEST(RefinementTest, NoFailures) {
  for (const char* name : {"C2", "C6", "S3", "D8", "A4", "C12", "D12"}) {
    auto ctx = Context(name);
    EXPECT_TRUE(refinement_failures(*ctx, {2}).empty()) << name;
    EXPECT_TRUE(refinement_failures(*ctx, {3}).empty()) << name;
    EXPECT_TRUE(refinement_failures(*ctx, prime_divisors(ctx->group().order())).empty()) << name;
  }
}

TEST(AtomsTest, MinimalMembers) {
  // Family generated by {0,1} and {2} in {0,1,2,3}, closed under union and complement.
  std::vector<std::vector<int>> family = {{0, 1, 2, 3}, {0, 1}, {2, 3}, {2}, {0, 1, 3}, {3}, {0, 1, 2}};
  EXPECT_EQ(atoms(family, 4), (std::vector<std::vector<int>>{{0, 1}, {2}, {3}}));
  EXPECT_EQ(atoms({{0, 1, 2}}, 3), (std::vector<std::vector<int>>{{0, 1, 2}}));
  EXPECT_THROW(atoms({{0}}, 3), InconsistencyError);
}

TEST(VerifyBlocksTest, DetectsBrokenIdempotents) {
  auto ctx = Context("S3");
  BlockPartition bp = bifree_blocks(*ctx, CoefficientRing::rationals());
  auto blocks = bp.blocks;
  blocks.pop_back();
  BlockChecks c = verify_blocks(*bp.algebra, blocks, CoefficientRing::rationals());
  EXPECT_TRUE(c.idempotent);
  EXPECT_FALSE(c.sum_to_one);
  blocks = bp.blocks;
  blocks[0].idempotent = add(blocks[0].idempotent, blocks[0].idempotent);
  EXPECT_FALSE(verify_blocks(*bp.algebra, blocks, CoefficientRing::rationals()).idempotent);
  EXPECT_FALSE(verify_blocks(*bp.algebra, bp.blocks, CoefficientRing::integers()).integrality);
}

TEST(VerifySuiteTest, CriterionAndBpLemma) {
  for (const char* name : {"C2", "S3", "C2xC2", "Q8"}) {
    auto ctx = Context(name);
    EXPECT_TRUE(verify_criterion(*ctx).pass) << name;
    EXPECT_TRUE(verify_bp_lemma(*ctx).pass) << name;
    EXPECT_TRUE(verify_refinement(*ctx).pass) << name;
  }
  EXPECT_THROW(run_suite("nope", *Context("C2")), std::invalid_argument);
}

}  // namespace
}  // namespace biset
