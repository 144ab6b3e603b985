#include "biset/finite_group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

namespace biset {

ElementSet ElementSet::from_members(int universe, std::span<const Elem> members) {
  ElementSet s(universe);
  for (Elem x : members) s.insert(x);
  return s;
}

int ElementSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(int(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet s(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = words_[i] & other.words_[i];
  return s;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ w) * 1099511628211ull;
  return h;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    auto x = a.words_[i], y = b.words_[i];
    if (x == y) continue;
    // first differing element decides; the set holding it is smaller
    auto diff = x ^ y;
    int bit = std::countr_zero(diff);
    return (x >> bit) & 1;
  }
  return false;
}

namespace {

Perm compose(const Perm& a, const Perm& b) {
  // (a*b)(x) = a(b(x))
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(std::string name, int degree, const std::vector<Perm>& generators,
                                           int max_order) {
  for (const auto& p : generators) {
    if (int(p.size()) != degree) throw std::invalid_argument("generator degree mismatch");
    std::vector<bool> seen(degree, false);
    for (int x : p) {
      if (x < 0 || x >= degree || seen[x]) throw std::invalid_argument("generator is not a permutation");
      seen[x] = true;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Perm p = compose(elems[i], g);
      if (index.emplace(p, int(elems.size())).second) {
        elems.push_back(std::move(p));
        if (int(elems.size()) > max_order) throw CapacityError("group order exceeds limit");
      }
    }
  }
  int n = int(elems.size());
  std::vector<int> table(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[std::size_t(a) * n + b] = index.at(compose(elems[a], elems[b]));
  FiniteGroup g = from_table(std::move(name), n, std::move(table));
  g.perms_ = std::move(elems);
  g.gen_perms_ = generators;
  g.degree_ = degree;
  return g;
}

FiniteGroup FiniteGroup::from_table(std::string name, int order, std::vector<int> table) {
  if (order < 1 || table.size() != std::size_t(order) * order) throw std::invalid_argument("bad table");
  FiniteGroup g;
  g.name_ = std::move(name);
  g.n_ = order;
  g.table_ = std::move(table);
  for (int a = 0; a < order; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw std::invalid_argument("element 0 is not the identity");
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
  int n = a.order(), m = b.order();
  std::vector<int> table(std::size_t(n) * m * n * m);
  for (int x1 = 0; x1 < n; ++x1)
    for (int y1 = 0; y1 < m; ++y1)
      for (int x2 = 0; x2 < n; ++x2)
        for (int y2 = 0; y2 < m; ++y2)
          table[std::size_t(x1 * m + y1) * n * m + x2 * m + y2] = a.mul(x1, x2) * m + b.mul(y1, y2);
  if (name.empty()) name = a.name() + "x" + b.name();
  return from_table(std::move(name), n * m, std::move(table));
}

void FiniteGroup::finish() {
  int n = n_;
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw std::invalid_argument("table is not a group");
  }
  elem_order_.assign(n, 1);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1;
    for (Elem x = a; x != 0; x = mul(x, a)) ++k;
    elem_order_[a] = k;
    exponent_ = std::lcm(exponent_, elem_order_[a]);
  }
  abelian_ = true;
  for (int a = 0; a < n && abelian_; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
  class_of_.assign(n, -1);
  std::vector<ConjugacyClass> raw;
  for (int a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    ConjugacyClass c;
    c.representative = a;
    c.element_order = elem_order_[a];
    for (int g = 0; g < n; ++g) {
      Elem y = conj(g, a);
      if (class_of_[y] < 0) {
        class_of_[y] = int(raw.size());
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.size = int(c.members.size());
    raw.push_back(std::move(c));
  }
  // identity first, then by element order, ties by smallest element
  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (raw[i].element_order != raw[j].element_order) return raw[i].element_order < raw[j].element_order;
    return raw[i].representative < raw[j].representative;
  });
  classes_.clear();
  std::vector<int> remap(raw.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = int(k);
    classes_.push_back(std::move(raw[order[k]]));
  }
  for (auto& c : class_of_) c = remap[c];
}

Elem FiniteGroup::power(Elem a, long k) const {
  int o = elem_order_[a];
  k %= o;
  if (k < 0) k += o;
  Elem r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::power_class(int cls, long k) const { return class_of_[power(classes_[cls].representative, k)]; }

ElementSet FiniteGroup::all() const {
  ElementSet s(n_);
  for (int a = 0; a < n_; ++a) s.insert(a);
  return s;
}

std::uint64_t FiniteGroup::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) { h = (h ^ v) * 1099511628211ull; };
  mix(std::uint64_t(n_));
  for (int v : table_) mix(std::uint64_t(v));
  return h;
}

ElementSet generate(const FiniteGroup& g, std::span<const Elem> gens) {
  ElementSet s(g.order());
  std::vector<Elem> list{0};
  s.insert(0);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem x : gens) {
      Elem y = g.mul(list[i], x);
      if (!s.contains(y)) {
        s.insert(y);
        list.push_back(y);
      }
    }
  }
  return s;
}

ElementSet join(const FiniteGroup& g, const ElementSet& h, Elem x) {
  if (h.contains(x)) return h;
  auto gens = generating_sequence(g, h);
  gens.push_back(x);
  return generate(g, gens);
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  auto m = s.members();
  for (Elem a : m)
    for (Elem b : m)
      if (!s.contains(g.mul(a, g.inv(b)))) return false;
  return true;
}

ElementSet conjugate(const FiniteGroup& g, Elem by, const ElementSet& h) {
  ElementSet s(g.order());
  for (Elem x : h.members()) s.insert(g.conj(by, x));
  return s;
}

ElementSet normalizer(const FiniteGroup& g, const ElementSet& h) {
  ElementSet n(g.order());
  auto gens = generating_sequence(g, h);
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : gens)
      if (!h.contains(g.conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) n.insert(x);
  }
  return n;
}

ElementSet centralizer(const FiniteGroup& g, const ElementSet& h) {
  ElementSet c(g.order());
  auto gens = generating_sequence(g, h);
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : gens)
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) c.insert(x);
  }
  return c;
}

bool is_normal(const FiniteGroup& g, const ElementSet& h, const ElementSet& in) {
  auto gens = generating_sequence(g, in);
  for (Elem x : gens)
    for (Elem y : h.members())
      if (!h.contains(g.conj(x, y))) return false;
  return true;
}

std::vector<Elem> generating_sequence(const FiniteGroup& g, const ElementSet& h) {
  std::vector<Elem> gens;
  auto members = h.members();
  ElementSet span(g.order());
  span.insert(0);
  int target = int(members.size());
  while (span.size() < target) {
    Elem best = -1;
    ElementSet best_span;
    int best_size = -1;
    for (Elem x : members) {
      if (span.contains(x)) continue;
      auto trial = gens;
      trial.push_back(x);
      ElementSet s = generate(g, trial);
      if (s.size() > best_size) {
        best_size = s.size();
        best = x;
        best_span = std::move(s);
        if (best_size == target) break;
      }
    }
    gens.push_back(best);
    span = std::move(best_span);
  }
  return gens;
}

}  // namespace biset
