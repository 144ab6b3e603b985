#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biset/finite_group.hpp"

namespace biset {

// A permutation group given by generators in 1-based cycle notation.
struct CatalogEntry {
  std::string name;
  int degree = 0;
  std::vector<std::vector<std::vector<int>>> generators;
  std::vector<std::string> aliases;
};

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
// "(1,2,3)(4,5)" -> {{1,2,3},{4,5}}; "()" is the identity. Throws std::invalid_argument.
std::vector<std::vector<int>> parse_cycles(const std::string& text);
// Entry from generators separated by ';', degree = largest point moved unless given.
CatalogEntry entry_from_generators(const std::string& name, const std::string& text, int degree = 0);

class Catalog {
 public:
  static Catalog builtin();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  // Replaces an entry of the same name.
  void add(CatalogEntry entry);
  const CatalogEntry* find(const std::string& name) const;
  // Builds the group; throws std::out_of_range for unknown names.
  GroupPtr build(const std::string& name, int max_order = 100000) const;

 private:
  std::vector<CatalogEntry> entries_;
};

GroupPtr build_group(const CatalogEntry& entry, int max_order = 100000);

}  // namespace biset
