#include <filesystem>
#include <fstream>

#include "biset/io.hpp"
#include "gtest/gtest.h"
#include "test_groups.hpp"

namespace biset {
namespace {

namespace fs = std::filesystem;
using testing::Context;
using testing::Group;
using testing::Q;

fs::path FreshDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("biset_io_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

bool SameStructure(const SparseAlgebra& a, const SparseAlgebra& b) {
  if (a.dimension() != b.dimension()) return false;
  for (int i = 0; i < a.dimension(); ++i)
    for (int j = 0; j < a.dimension(); ++j) {
      auto x = a.product(i, j), y = b.product(i, j);
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k].index != y[k].index || x[k].coeff != y[k].coeff) return false;
    }
  return true;
}

TEST(RationalTest, TextRoundTrip) {
  EXPECT_EQ(to_string(Q(-3, 6)), "-1/2");
  EXPECT_EQ(to_string(Rational(2)), "2/1");
  EXPECT_EQ(parse_rational("4/6"), Q(2, 3));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(prime_divisors(60), (std::vector<unsigned long>{2, 3, 5}));
}

TEST(StructureCacheTest, RoundTrip) {
  fs::path dir = FreshDir("roundtrip");
  auto lat = Context("S3")->lattice_ptr();
  auto built = BisetAlgebra::build(lat, BisetTag::LeftFree);
  fs::path path = structure_cache_path(dir, *built);
  save_structure(path, *built);
  ASSERT_TRUE(fs::exists(path));

  auto fresh = BisetAlgebra::build(lat, BisetTag::LeftFree);
  EXPECT_FALSE(fresh->has_structure());
  ASSERT_TRUE(load_structure(path, *fresh));
  EXPECT_TRUE(fresh->has_structure());
  EXPECT_TRUE(SameStructure(fresh->structure(), built->structure()));
  fs::remove_all(dir);
}

TEST(StructureCacheTest, RejectsStaleAndMalformedFiles) {
  fs::path dir = FreshDir("stale");
  auto s3 = BisetAlgebra::build(Context("S3")->lattice_ptr(), BisetTag::Bifree);
  auto c6 = BisetAlgebra::build(Context("C6")->lattice_ptr(), BisetTag::Bifree);
  fs::path path = dir / "cached.json";
  save_structure(path, *s3);
  EXPECT_FALSE(load_structure(path, *c6));
  EXPECT_FALSE(c6->has_structure());
  EXPECT_FALSE(load_structure(dir / "missing.json", *c6));
  {
    std::ofstream out(dir / "broken.json");
    out << "{\"version\": 1, \"tensor\": [";
  }
  EXPECT_FALSE(load_structure(dir / "broken.json", *c6));
  EXPECT_NE(structure_cache_path(dir, *s3), structure_cache_path(dir, *c6));
  fs::remove_all(dir);
}

TEST(StructureCacheTest, ContextWritesAndReusesCache) {
  fs::path dir = FreshDir("context");
  auto first = GroupContext::create(Group("D8"), kDefaultMaxOrder, dir.string());
  auto a = first->algebra(BisetTag::LeftFree);
  fs::path path = structure_cache_path(dir, *a);
  ASSERT_TRUE(fs::exists(path));
  auto second = GroupContext::create(Group("D8"), kDefaultMaxOrder, dir.string());
  auto b = second->algebra(BisetTag::LeftFree);
  EXPECT_TRUE(SameStructure(a->structure(), b->structure()));
  fs::remove_all(dir);
}

TEST(CatalogIoTest, EntryJsonRoundTrip) {
  CatalogEntry e = entry_from_generators("M", "(1,2,3)(4,5);(1,4)");
  e.aliases = {"m1", "m2"};
  CatalogEntry back = catalog_entry_from_json(to_json(e));
  EXPECT_EQ(back.name, e.name);
  EXPECT_EQ(back.degree, 5);
  EXPECT_EQ(back.generators, e.generators);
  EXPECT_EQ(back.aliases, e.aliases);
  EXPECT_EQ(load_catalog("/nonexistent/catalog.json").entries().size(), Catalog::builtin().entries().size());
}

TEST(CatalogIoTest, VectorJsonUsesDescriptors) {
  auto ctx = Context("C2");
  auto alg = ctx->algebra(BisetTag::Bifree);
  RVector v = {Q(-1, 2), 1};
  nlohmann::json j = to_json(v, *alg);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[alg->descriptor(0)], "-1/2");
  EXPECT_EQ(j[alg->descriptor(1)], "1/1");
  EXPECT_EQ(to_json(RVector{0, 1}, *alg).size(), 1u);
}

}  // namespace
}  // namespace biset
