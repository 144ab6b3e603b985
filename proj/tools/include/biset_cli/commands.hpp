#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "biset/catalog.hpp"
#include "biset/rational.hpp"

namespace biset::cli {

struct RunConfig {
  std::string group;  // catalog name or alias, or generators such as "(1,2,3);(1,2)"
  std::string ring = "bifree";
  std::string coeff = "Q";
  std::vector<std::string> suites;
  unsigned long p = 0;
  std::optional<std::filesystem::path> cache_dir;
  std::filesystem::path catalog_file;  // user additions, empty for none
  bool slow = false;
  int jobs = 1;
};

// Groups above this order need the slow-tier flag.
inline constexpr int kFastOrder = 24;

// "Q", "Z", "Z_2", "Z_{2,3}", "Z_(2,3)".
CoefficientRing parse_coeff(const std::string& text);
Catalog catalog_for(const RunConfig& cfg);
GroupPtr resolve_group(const RunConfig& cfg);

// Each report carries "ok"; the process exit code is 0 exactly when it is true.
nlohmann::json cmd_blocks(const RunConfig& cfg);
nlohmann::json cmd_verify(const RunConfig& cfg);
nlohmann::json cmd_fusion(const RunConfig& cfg);
nlohmann::json cmd_catalog_list(const RunConfig& cfg);

}  // namespace biset::cli
