#include <algorithm>
#include <numeric>
#include <set>

#include "biset/catalog.hpp"
#include "biset/homomorphisms.hpp"
#include "biset/subgroups.hpp"
#include "gtest/gtest.h"
#include "test_groups.hpp"

namespace biset {
namespace {

using testing::Context;
using testing::Group;

int CountMaps(const std::string& from, const std::string& to, MapKind kind) {
  GroupPtr a = Group(from), b = Group(to);
  return int(enumerate_maps(a, a->all(), b, b->all(), kind).size());
}

TEST(FiniteGroupTest, CatalogOrders) {
  const std::map<std::string, int> orders = {{"C2", 2},  {"C3", 3},    {"C4", 4},  {"C6", 6},  {"C8", 8},
                                             {"C12", 12}, {"C2xC2", 4}, {"S3", 6},  {"D8", 8},  {"Q8", 8},
                                             {"A4", 12}, {"D12", 12},   {"S4", 24}, {"A5", 60}, {"C2^3", 8}};
  for (const auto& [name, n] : orders) EXPECT_EQ(Group(name)->order(), n) << name;
}

TEST(FiniteGroupTest, TableIsAGroup) {
  for (const char* name : {"S3", "Q8", "A4"}) {
    GroupPtr g = Group(name);
    const int n = g->order();
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(g->mul(a, g->identity()), a);
      EXPECT_EQ(g->mul(a, g->inv(a)), g->identity());
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) ASSERT_EQ(g->mul(g->mul(a, b), c), g->mul(a, g->mul(b, c)));
    }
  }
}

TEST(FiniteGroupTest, ConjugacyClassesPartitionTheGroup) {
  for (const char* name : {"S3", "D8", "Q8", "A4", "S4", "A5"}) {
    GroupPtr g = Group(name);
    int total = 0;
    for (const auto& c : g->classes()) total += c.size;
    EXPECT_EQ(total, g->order()) << name;
  }
  EXPECT_EQ(Group("S3")->classes().size(), 3u);
  EXPECT_EQ(Group("S4")->classes().size(), 5u);
  EXPECT_EQ(Group("A5")->classes().size(), 5u);
}

TEST(FiniteGroupTest, DirectProduct) {
  GroupPtr c2 = Group("C2");
  FiniteGroup v = FiniteGroup::direct_product(*c2, *c2);
  EXPECT_EQ(v.order(), 4);
  EXPECT_TRUE(v.is_abelian());
  EXPECT_EQ(v.exponent(), 2);
}

TEST(SubgroupLatticeTest, S3) {
  const auto& lat = Context("S3")->lattice();
  EXPECT_EQ(lat.size(), 6);
  EXPECT_EQ(lat.num_conj_classes(), 4);
  EXPECT_EQ(lat.num_iso_classes(), 4);
  EXPECT_EQ(lat.order(lat.trivial()), 1);
  EXPECT_EQ(lat.order(lat.whole()), 6);
}

TEST(SubgroupLatticeTest, C4HasThreeSubgroups) { EXPECT_EQ(Context("C4")->lattice().size(), 3); }

TEST(SubgroupLatticeTest, SubgroupCounts) {
  // Number of subgroups and of conjugacy classes of subgroups.
  const std::map<std::string, std::pair<int, int>> expected = {
      {"C2xC2", {5, 5}}, {"D8", {10, 8}}, {"Q8", {6, 6}}, {"A4", {10, 5}}, {"S4", {30, 11}}, {"A5", {59, 9}}};
  for (const auto& [name, counts] : expected) {
    const auto& lat = Context(name)->lattice();
    EXPECT_EQ(lat.size(), counts.first) << name;
    EXPECT_EQ(lat.num_conj_classes(), counts.second) << name;
  }
}

TEST(SubgroupLatticeTest, Invariants) {
  for (const char* name : {"D8", "A4", "S4"}) {
    const auto& lat = Context(name)->lattice();
    const auto& g = lat.group();
    int members = 0;
    for (int c = 0; c < lat.num_conj_classes(); ++c) members += int(lat.class_members(c).size());
    EXPECT_EQ(members, lat.size());
    for (int i = 0; i < lat.size(); ++i) {
      EXPECT_TRUE(is_subgroup(g, lat.subgroup(i)));
      EXPECT_EQ(lat.index_of(lat.subgroup(i)), i);
      EXPECT_EQ(generate(g, lat.generators(i)), lat.subgroup(i));
      EXPECT_TRUE(lat.subgroup(i).subset_of(lat.subgroup(lat.normalizer(i))));
      EXPECT_EQ(g.order() % lat.order(i), 0);
      if (i > 0) EXPECT_LE(lat.order(i - 1), lat.order(i));
      // the transporter conjugates the class representative onto the member
      int rep = lat.class_rep(lat.conj_class(i));
      EXPECT_EQ(conjugate(g, lat.transporter(i), lat.subgroup(rep)), lat.subgroup(i));
      // class size = index of the normalizer
      EXPECT_EQ(int(lat.class_members(lat.conj_class(i)).size()), g.order() / lat.order(lat.normalizer(i)));
    }
  }
}

TEST(SubgroupLatticeTest, DerivedSubgroups) {
  GroupPtr s4 = Group("S4");
  EXPECT_EQ(derived_subgroup(*s4, s4->all()).size(), 12);
  GroupPtr a5 = Group("A5");
  EXPECT_EQ(derived_subgroup(*a5, a5->all()).size(), 60);
  EXPECT_TRUE(is_solvable(*s4));
  EXPECT_FALSE(is_solvable(*a5));
}

TEST(SubgroupLatticeTest, PiResidual) {
  const auto& c6 = Context("C6")->lattice();
  EXPECT_EQ(c6.order(pi_residual(c6, c6.whole(), {2})), 3);
  const auto& s3 = Context("S3")->lattice();
  EXPECT_EQ(s3.order(pi_residual(s3, s3.whole(), {2, 3})), 1);
  EXPECT_EQ(s3.order(pi_residual(s3, s3.whole(), {2})), 3);
  EXPECT_TRUE(is_pi_perfect(s3, s3.trivial(), {2}));
  const auto& a5 = Context("A5")->lattice();
  EXPECT_TRUE(is_pi_perfect(a5, a5.whole(), {2, 3, 5}));
}

TEST(AutDataTest, Orders) {
  struct Case {
    const char* name;
    int aut, out;
  };
  for (Case c : {Case{"C2", 1, 1}, Case{"C2xC2", 6, 6}, Case{"Q8", 24, 6}, Case{"D8", 8, 2}, Case{"S3", 6, 1},
                 Case{"A4", 24, 2}, Case{"C12", 4, 4}}) {
    GroupPtr g = Group(c.name);
    AutData a(g, g->all());
    EXPECT_EQ(a.aut()->order(), c.aut) << c.name;
    EXPECT_EQ(a.out()->order(), c.out) << c.name;
  }
}

TEST(AutDataTest, MapsAreAutomorphisms) {
  GroupPtr g = Group("D8");
  AutData a(g, g->all());
  for (Elem i = 0; i < a.aut()->order(); ++i) {
    const GroupMap& m = a.map(i);
    EXPECT_TRUE(m.is_injective());
    EXPECT_EQ(a.index_of(m), i);
    for (Elem x = 0; x < g->order(); ++x)
      for (Elem y = 0; y < g->order(); ++y) ASSERT_EQ(m(g->mul(x, y)), g->mul(m(x), m(y)));
  }
}

TEST(HomomorphismTest, Counts) {
  EXPECT_EQ(CountMaps("C2", "C2xC2", MapKind::Injective), 3);
  EXPECT_EQ(CountMaps("C4", "C2", MapKind::Surjective), 1);
  EXPECT_EQ(CountMaps("C3", "S3", MapKind::Injective), 2);
  EXPECT_EQ(CountMaps("S3", "S3", MapKind::Bijective), 6);
  // trivial map, or one of 3 kernels of index 2 times one of 3 involutions
  EXPECT_EQ(CountMaps("C2xC2", "S3", MapKind::Any), 10);
}

TEST(HomomorphismTest, ComposeAndInverse) {
  GroupPtr g = Group("S4");
  AutData a(g, g->all());
  const GroupMap& f = a.map(5);
  GroupMap id = compose(inverse(f), f);
  for (Elem x = 0; x < g->order(); ++x) EXPECT_EQ(id(x), x);
  const auto& lat = Context("S4")->lattice();
  GroupPtr v4 = Group("C2xC2");
  int a4 = lat.size() - 2;
  ASSERT_EQ(lat.order(a4), 12);
  EXPECT_FALSE(find_isomorphism(v4, v4->all(), g, lat.subgroup(a4)).has_value());
  int normal_v4 = -1;
  for (int i = 0; i < lat.size(); ++i)
    if (lat.order(i) == 4 && lat.is_normal(i)) normal_v4 = i;
  ASSERT_GE(normal_v4, 0);
  EXPECT_TRUE(find_isomorphism(v4, v4->all(), g, lat.subgroup(normal_v4)).has_value());
}

TEST(CatalogTest, ParseCycles) {
  EXPECT_EQ(parse_cycles("(1,2,3)(4,5)"), (std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}}));
  EXPECT_TRUE(parse_cycles("()").empty());
  EXPECT_THROW(parse_cycles("(1,2"), std::invalid_argument);
  EXPECT_THROW(parse_cycles("1,2)"), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(0,1)"), std::invalid_argument);
}

TEST(CatalogTest, EntryFromGenerators) {
  CatalogEntry e = entry_from_generators("S3b", "(1,2,3);(1,2)");
  EXPECT_EQ(e.degree, 3);
  EXPECT_EQ(build_group(e)->order(), 6);
  Catalog cat = Catalog::builtin();
  EXPECT_EQ(cat.find("V4"), cat.find("C2xC2"));
  EXPECT_THROW(cat.build("nope"), std::out_of_range);
  cat.add(e);
  EXPECT_EQ(cat.build("S3b")->order(), 6);
}

}  // namespace
}  // namespace biset
