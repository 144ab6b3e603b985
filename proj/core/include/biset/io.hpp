#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "biset/biset_algebra.hpp"
#include "biset/catalog.hpp"

namespace biset {

inline constexpr int kCacheFormatVersion = 1;

// Cache file for a structure tensor, keyed by the multiplication table hash.
std::filesystem::path structure_cache_path(const std::filesystem::path& dir, const BisetAlgebra& alg);
// Installs a cached tensor; false when the file is missing, stale or malformed.
bool load_structure(const std::filesystem::path& path, const BisetAlgebra& alg);
void save_structure(const std::filesystem::path& path, const BisetAlgebra& alg);

nlohmann::json to_json(const CatalogEntry& e);
CatalogEntry catalog_entry_from_json(const nlohmann::json& j);
// Built-in groups plus the entries stored in a user catalog file, if present.
Catalog load_catalog(const std::filesystem::path& user_file);
void save_user_entry(const std::filesystem::path& user_file, const CatalogEntry& e);

nlohmann::json to_json(const RVector& v, const BisetAlgebra& alg);

}  // namespace biset
