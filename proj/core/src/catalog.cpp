#include "biset/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace biset {

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      if (a < 1 || a > degree || b < 1 || b > degree) throw std::invalid_argument("cycle point out of range");
      p[a - 1] = b - 1;
    }
  }
  return p;
}

namespace {

std::vector<int> range1(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

}  // namespace

Catalog Catalog::builtin() {
  Catalog c;
  c.entries_ = {
      {"C2", 2, {{range1(2)}}, {}},
      {"C3", 3, {{range1(3)}}, {}},
      {"C4", 4, {{range1(4)}}, {}},
      {"C6", 6, {{range1(6)}}, {}},
      {"C8", 8, {{range1(8)}}, {}},
      {"C12", 12, {{range1(12)}}, {}},
      {"C2xC2", 4, {{{1, 2}}, {{3, 4}}}, {"V4", "C2×C2", "C2^2"}},
      {"C2xC2xC2", 6, {{{1, 2}}, {{3, 4}}, {{5, 6}}}, {"C2×C2×C2", "C2^3", "E8"}},
      {"S3", 3, {{{1, 2, 3}}, {{1, 2}}}, {}},
      {"D8", 4, {{{1, 2, 3, 4}}, {{1, 3}}}, {}},
      {"Q8", 8, {{{1, 3, 2, 4}, {5, 7, 6, 8}}, {{1, 5, 2, 6}, {3, 8, 4, 7}}}, {}},
      {"A4", 4, {{{1, 2, 3}}, {{1, 2}, {3, 4}}}, {}},
      {"D12", 6, {{range1(6)}, {{1, 6}, {2, 5}, {3, 4}}}, {}},
      {"S4", 4, {{{1, 2, 3, 4}}, {{1, 2}}}, {}},
      {"A5", 5, {{range1(5)}, {{1, 2, 3}}}, {}},
  };
  return c;
}

void Catalog::add(CatalogEntry entry) {
  for (auto& e : entries_) {
    if (e.name == entry.name) {
      e = std::move(entry);
      return;
    }
  }
  entries_.push_back(std::move(entry));
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
    if (std::find(e.aliases.begin(), e.aliases.end(), name) != e.aliases.end()) return &e;
  }
  return nullptr;
}

GroupPtr build_group(const CatalogEntry& entry, int max_order) {
  std::vector<Perm> gens;
  for (const auto& g : entry.generators) gens.push_back(perm_from_cycles(entry.degree, g));
  return std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(entry.name, entry.degree, gens, max_order));
}

GroupPtr Catalog::build(const std::string& name, int max_order) const {
  const CatalogEntry* e = find(name);
  if (!e) throw std::out_of_range("unknown group: " + name);
  return build_group(*e, max_order);
}

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(text.substr(i), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("cycle notation: expected a point in \"" + text + "\"");
      }
      if (v < 1) throw std::invalid_argument("cycle notation: points are 1-based");
      cyc.push_back(v);
      i += used;
      skip();
      if (i < text.size() && text[i] == ',') ++i;
      else if (i >= text.size() || text[i] != ')')
        throw std::invalid_argument("cycle notation: unterminated cycle in \"" + text + "\"");
    }
    if (cyc.size() > 1) out.push_back(std::move(cyc));
    skip();
  }
  return out;
}

CatalogEntry entry_from_generators(const std::string& name, const std::string& text, int degree) {
  CatalogEntry e;
  e.name = name;
  std::size_t start = 0;
  int moved = 1;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    auto cycles = parse_cycles(text.substr(start, end - start));
    for (const auto& c : cycles) moved = std::max(moved, *std::max_element(c.begin(), c.end()));
    e.generators.push_back(std::move(cycles));
    start = end + 1;
  }
  if (degree > 0 && degree < moved) throw std::invalid_argument("degree smaller than a moved point");
  e.degree = degree > 0 ? degree : moved;
  return e;
}

}  // namespace biset
