#include <filesystem>
#include <string>

#include "biset/io.hpp"
#include "biset/verify.hpp"
#include "biset_cli/commands.hpp"
#include "gtest/gtest.h"
#include "test_groups.hpp"

namespace biset::cli {
namespace {

namespace fs = std::filesystem;

fs::path FreshDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("biset_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunConfig Config(std::string group) {
  RunConfig cfg;
  cfg.group = std::move(group);
  return cfg;
}

TEST(ParseCoeffTest, Spellings) {
  EXPECT_EQ(parse_coeff("Q").kind(), CoefficientRing::Kind::Rationals);
  EXPECT_EQ(parse_coeff("Z").kind(), CoefficientRing::Kind::Integers);
  for (const char* text : {"Z_{2,3}", "Z_(2,3)", "Z_{3,2}"}) {
    CoefficientRing r = parse_coeff(text);
    EXPECT_EQ(r.kind(), CoefficientRing::Kind::Semilocal) << text;
    EXPECT_EQ(r.primes(), (std::vector<unsigned long>{2, 3})) << text;
  }
  EXPECT_EQ(parse_coeff("Z_5").primes(), (std::vector<unsigned long>{5}));
  EXPECT_THROW(parse_coeff("R"), std::invalid_argument);
  EXPECT_THROW(parse_coeff("Z_4"), std::invalid_argument);
  EXPECT_THROW(parse_coeff("Z_{}"), std::invalid_argument);
}

TEST(ParseCoeffTest, SemilocalMembership) {
  CoefficientRing r = parse_coeff("Z_(2)");
  EXPECT_TRUE(r.contains(testing::Q(1, 3)));
  EXPECT_FALSE(r.contains(testing::Q(1, 2)));
  EXPECT_TRUE(r.is_non_unit(2));
  EXPECT_FALSE(r.is_non_unit(3));
}

TEST(ResolveGroupTest, NamesAliasesAndGenerators) {
  EXPECT_EQ(resolve_group(Config("S3"))->order(), 6);
  EXPECT_EQ(resolve_group(Config("V4"))->order(), 4);
  EXPECT_EQ(resolve_group(Config("(1,2,3,4);(1,2)"))->order(), 24);
  EXPECT_THROW(resolve_group(Config("NoSuchGroup")), std::invalid_argument);
}

TEST(BlocksCommandTest, ReportShape) {
  nlohmann::json j = cmd_blocks(Config("S3"));
  EXPECT_EQ(j["command"], "blocks");
  EXPECT_EQ(j["order"], 6);
  EXPECT_EQ(j["coeff"], "Q");
  EXPECT_EQ(j["num_blocks"], 4);
  EXPECT_EQ(j["pairs"].size(), 4u);
  EXPECT_TRUE(j["ok"].get<bool>());
  for (const auto& b : j["blocks"]) {
    ASSERT_TRUE(b["idempotent"].is_object());
    for (const auto& [k, v] : b["idempotent"].items()) EXPECT_NE(v.get<std::string>().find('/'), std::string::npos);
  }
}

TEST(BlocksCommandTest, ReportIsByteStable) {
  RunConfig cfg = Config("D8");
  cfg.ring = "leftfree";
  std::string a = cmd_blocks(cfg).dump(2);
  std::string b = cmd_blocks(cfg).dump(2);
  EXPECT_EQ(a, b);
  cfg.jobs = 1;
  EXPECT_EQ(cmd_blocks(cfg)["num_blocks"], 1);
}

TEST(BlocksCommandTest, IntegralBlocksOfC4) {
  RunConfig cfg = Config("C4");
  cfg.ring = "leftfree";
  cfg.coeff = "Z";
  nlohmann::json j = cmd_blocks(cfg);
  EXPECT_EQ(j["num_blocks"], 1);
  EXPECT_TRUE(j["checks"]["center_in_bifree"].get<bool>());
}

TEST(BlocksCommandTest, LargeGroupsNeedTheFlag) {
  RunConfig cfg = Config("A5");
  cfg.ring = "leftfree";
  EXPECT_THROW(cmd_blocks(cfg), CapacityError);
  cfg.ring = "other";
  EXPECT_THROW(cmd_blocks(cfg), std::invalid_argument);
  EXPECT_THROW(cmd_verify(Config("A5")), CapacityError);
}

TEST(VerifyCommandTest, BruteForceOracleIsCapped) {
  RunConfig cfg = Config("S4");
  cfg.suites = {"mult"};
  EXPECT_THROW(cmd_verify(cfg), CapacityError);
  cfg.suites = {"bp"};
  EXPECT_TRUE(cmd_verify(cfg)["ok"].get<bool>());
}

TEST(VerifyCommandTest, AllSuites) {
  RunConfig cfg = Config("C2xC2");
  cfg.suites = {"all"};
  nlohmann::json j = cmd_verify(cfg);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["suites"].size(), suite_names().size());
  cfg.suites = {"bogus"};
  EXPECT_THROW(cmd_verify(cfg), std::invalid_argument);
}

TEST(FusionCommandTest, S4AtTwo) {
  RunConfig cfg = Config("S4");
  EXPECT_THROW(cmd_fusion(cfg), std::invalid_argument);
  cfg.p = 2;
  nlohmann::json j = cmd_fusion(cfg);
  EXPECT_EQ(j["order"], 24);
  EXPECT_EQ(j["sylow_order"], 8);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_TRUE(j["connected"].get<bool>());
  EXPECT_TRUE(j["sigma_homomorphism"].get<bool>());
  EXPECT_TRUE(j["sigma_injective"].get<bool>());
}

TEST(CatalogCommandTest, AddThenList) {
  fs::path dir = FreshDir("catalog");
  fs::path file = dir / "catalog.json";
  CatalogEntry e = entry_from_generators("K4", "(1,2)(3,4);(1,3)(2,4)");
  e.aliases = {"Klein"};
  save_user_entry(file, e);
  RunConfig cfg = Config("Klein");
  cfg.catalog_file = file;
  EXPECT_EQ(resolve_group(cfg)->order(), 4);
  nlohmann::json list = cmd_catalog_list(cfg);
  bool found = false;
  for (const auto& g : list["groups"])
    if (g["name"] == "K4") {
      found = true;
      EXPECT_EQ(g["order"], 4);
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(list["groups"].size(), Catalog::builtin().entries().size() + 1);
  // same name replaces the entry
  save_user_entry(file, entry_from_generators("K4", "(1,2,3,4)"));
  cfg.group = "K4";
  EXPECT_EQ(resolve_group(cfg)->order(), 4);
  EXPECT_TRUE(load_catalog(file).find("K4")->aliases.empty());
  fs::remove_all(dir);
}

}  // namespace
}  // namespace biset::cli
