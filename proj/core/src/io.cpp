#include "biset/io.hpp"

#include <fstream>
#include <sstream>

namespace biset {

using nlohmann::json;

std::filesystem::path structure_cache_path(const std::filesystem::path& dir, const BisetAlgebra& alg) {
  std::ostringstream name;
  name << "structure-" << to_string(alg.tag()) << "-" << std::hex << alg.group().content_hash() << ".v"
       << std::dec << kCacheFormatVersion << ".json";
  return dir / name.str();
}

namespace {

json class_list(const BisetAlgebra& alg) {
  json classes = json::array();
  for (int i = 0; i < alg.dimension(); ++i) classes.push_back(alg.descriptor(i));
  return classes;
}

}  // namespace

bool load_structure(const std::filesystem::path& path, const BisetAlgebra& alg) {
  std::ifstream in(path);
  if (!in) return false;
  try {
    json j = json::parse(in);
    if (j.at("version").get<int>() != kCacheFormatVersion) return false;
    if (j.at("group_hash").get<std::uint64_t>() != alg.group().content_hash()) return false;
    if (j.at("classes") != class_list(alg)) return false;
    const int d = alg.dimension();
    std::vector<std::vector<Term>> products(std::size_t(d) * d);
    for (const auto& t : j.at("tensor")) {
      int a = t.at(0), b = t.at(1), k = t.at(2);
      long v = t.at(3);
      if (a < 0 || b < 0 || k < 0 || a >= d || b >= d || k >= d) return false;
      products[std::size_t(a) * d + b].push_back({k, v});
    }
    alg.install_structure(SparseAlgebra(d, products, alg.one()));
    return true;
  } catch (const json::exception&) {
    return false;
  }
}

void save_structure(const std::filesystem::path& path, const BisetAlgebra& alg) {
  const auto& s = alg.structure();
  json tensor = json::array();
  for (int a = 0; a < s.dimension(); ++a)
    for (int b = 0; b < s.dimension(); ++b)
      for (const auto& t : s.product(a, b)) tensor.push_back({a, b, t.index, t.coeff});
  json j = {{"version", kCacheFormatVersion},
            {"group", alg.group().name()},
            {"group_hash", alg.group().content_hash()},
            {"tag", to_string(alg.tag())},
            {"classes", class_list(alg)},
            {"tensor", std::move(tensor)}};
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, path);
}

json to_json(const CatalogEntry& e) {
  return {{"name", e.name}, {"degree", e.degree}, {"generators", e.generators}, {"aliases", e.aliases}};
}

CatalogEntry catalog_entry_from_json(const json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.degree = j.at("degree").get<int>();
  e.generators = j.at("generators").get<std::vector<std::vector<std::vector<int>>>>();
  if (j.contains("aliases")) e.aliases = j.at("aliases").get<std::vector<std::string>>();
  return e;
}

Catalog load_catalog(const std::filesystem::path& user_file) {
  Catalog cat = Catalog::builtin();
  std::ifstream in(user_file);
  if (!in) return cat;
  json j = json::parse(in);
  for (const auto& e : j.at("groups")) cat.add(catalog_entry_from_json(e));
  return cat;
}

void save_user_entry(const std::filesystem::path& user_file, const CatalogEntry& e) {
  json j = {{"groups", json::array()}};
  {
    std::ifstream in(user_file);
    if (in) j = json::parse(in);
  }
  auto& groups = j["groups"];
  json entry = to_json(e);
  bool replaced = false;
  for (auto& g : groups)
    if (g.at("name") == e.name) {
      g = entry;
      replaced = true;
    }
  if (!replaced) groups.push_back(entry);
  if (user_file.has_parent_path()) std::filesystem::create_directories(user_file.parent_path());
  std::ofstream out(user_file);
  out << j.dump(2) << "\n";
}

json to_json(const RVector& v, const BisetAlgebra& alg) {
  json out = json::object();
  for (int i = 0; i < alg.dimension(); ++i)
    if (sgn(v[i])) out[alg.descriptor(i)] = to_string(v[i]);
  return out;
}

}  // namespace biset
