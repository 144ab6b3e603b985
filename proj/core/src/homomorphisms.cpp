#include "biset/homomorphisms.hpp"

#include <algorithm>
#include <map>

namespace biset {

ElementSet GroupMap::image_set() const {
  ElementSet s(to->order());
  for (Elem x : domain.members()) s.insert(image[x]);
  return s;
}

ElementSet GroupMap::kernel() const {
  ElementSet s(from->order());
  for (Elem x : domain.members())
    if (image[x] == 0) s.insert(x);
  return s;
}

bool GroupMap::is_injective() const { return kernel().size() == 1; }

GroupMap compose(const GroupMap& f, const GroupMap& g) {
  GroupMap h{g.from, f.to, g.domain, std::vector<Elem>(g.from->order(), -1)};
  for (Elem x : g.domain.members()) {
    Elem y = g.image[x];
    if (y < 0 || f.image[y] < 0) throw std::invalid_argument("maps are not composable");
    h.image[x] = f.image[y];
  }
  return h;
}

GroupMap inverse(const GroupMap& iso) {
  GroupMap h{iso.to, iso.from, iso.image_set(), std::vector<Elem>(iso.to->order(), -1)};
  for (Elem x : iso.domain.members()) h.image[iso.image[x]] = x;
  return h;
}

GroupMap conjugation_map(const GroupPtr& g, Elem x, const ElementSet& dom) {
  GroupMap m{g, g, dom, std::vector<Elem>(g->order(), -1)};
  for (Elem u : dom.members()) m.image[u] = g->conj(x, u);
  return m;
}

GroupMap identity_map(const GroupPtr& g, const ElementSet& dom) { return conjugation_map(g, 0, dom); }

void for_each_map(const GroupPtr& from, const ElementSet& dom, const GroupPtr& to, const ElementSet& cod,
                  MapKind kind, const std::function<bool(const GroupMap&)>& visit) {
  const FiniteGroup& A = *from;
  const FiniteGroup& B = *to;
  int dom_size = dom.size(), cod_size = cod.size();
  bool need_inj = kind == MapKind::Injective || kind == MapKind::Bijective;
  bool need_surj = kind == MapKind::Surjective || kind == MapKind::Bijective;
  if (need_inj && dom_size > cod_size) return;
  if (need_surj && dom_size < cod_size) return;
  if (kind == MapKind::Bijective && dom_size != cod_size) return;
  if (need_surj && dom_size % cod_size != 0) return;
  if (need_inj && cod_size % dom_size != 0) return;

  auto gens = generating_sequence(A, dom);
  auto cod_members = cod.members();
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int o = A.element_order(gens[i]);
    for (Elem y : cod_members) {
      int oy = B.element_order(y);
      if (need_inj ? oy == o : o % oy == 0) cands[i].push_back(y);
    }
    if (cands[i].empty()) return;
  }
  // BFS order over the Cayley graph of dom.
  std::vector<Elem> order{0};
  std::vector<std::pair<int, int>> parent(A.order(), {-1, -1});
  {
    ElementSet seen(A.order());
    seen.insert(0);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem y = A.mul(order[i], gens[k]);
        if (!seen.contains(y)) {
          seen.insert(y);
          parent[y] = {order[i], int(k)};
          order.push_back(y);
        }
      }
  }
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<Elem> t(gens.size());
  GroupMap m{from, to, dom, std::vector<Elem>(A.order(), -1)};
  for (;;) {
    for (std::size_t k = 0; k < gens.size(); ++k) t[k] = cands[k][choice[k]];
    bool ok = true;
    std::fill(m.image.begin(), m.image.end(), -1);
    m.image[0] = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
      auto [p, k] = parent[order[i]];
      m.image[order[i]] = B.mul(m.image[p], t[k]);
    }
    for (std::size_t i = 0; i < order.size() && ok; ++i)
      for (std::size_t k = 0; k < gens.size(); ++k)
        if (m.image[A.mul(order[i], gens[k])] != B.mul(m.image[order[i]], t[k])) {
          ok = false;
          break;
        }
    if (ok && (need_inj || need_surj)) {
      ElementSet img(B.order());
      for (Elem x : order) img.insert(m.image[x]);
      int isz = img.size();
      if (need_inj && isz != dom_size) ok = false;
      if (need_surj && isz != cod_size) ok = false;
    }
    if (ok && !visit(m)) return;
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == cands[k].size()) choice[k++] = 0;
    if (k == gens.size()) break;
  }
}

std::vector<GroupMap> enumerate_maps(const GroupPtr& from, const ElementSet& dom, const GroupPtr& to,
                                     const ElementSet& cod, MapKind kind) {
  std::vector<GroupMap> out;
  for_each_map(from, dom, to, cod, kind, [&](const GroupMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

namespace {

std::vector<int> order_profile(const FiniteGroup& g, const ElementSet& s) {
  std::vector<int> p;
  for (Elem x : s.members()) p.push_back(g.element_order(x));
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::optional<GroupMap> find_isomorphism(const GroupPtr& ga, const ElementSet& a, const GroupPtr& gb,
                                         const ElementSet& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (order_profile(*ga, a) != order_profile(*gb, b)) return std::nullopt;
  if (centralizer(*ga, a).intersect(a).size() != centralizer(*gb, b).intersect(b).size()) return std::nullopt;
  std::optional<GroupMap> found;
  for_each_map(ga, a, gb, b, MapKind::Bijective, [&](const GroupMap& m) {
    found = m;
    return false;
  });
  return found;
}

AutData::AutData(GroupPtr ambient, ElementSet subgroup)
    : ambient_(std::move(ambient)), subgroup_(std::move(subgroup)) {
  const FiniteGroup& G = *ambient_;
  gens_ = generating_sequence(G, subgroup_);
  auto members = subgroup_.members();
  auto all = enumerate_maps(ambient_, subgroup_, ambient_, subgroup_, MapKind::Bijective);
  std::sort(all.begin(), all.end(), [&](const GroupMap& x, const GroupMap& y) {
    for (Elem m : members)
      if (x.image[m] != y.image[m]) return x.image[m] < y.image[m];
    return false;
  });
  maps_ = std::move(all);
  int n = int(maps_.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> key;
    for (Elem g : gens_) key.push_back(maps_[i].image[g]);
    lookup_.emplace(std::move(key), i);
  }
  std::vector<int> table(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> key;
      for (Elem g : gens_) key.push_back(maps_[i].image[maps_[j].image[g]]);
      table[std::size_t(i) * n + j] = lookup_.at(key);
    }
  aut_ = std::make_shared<FiniteGroup>(FiniteGroup::from_table("Aut", n, std::move(table)));
  inn_ = ElementSet(n);
  for (Elem u : members) inn_.insert(conjugation(u));
  // Out as the quotient by Inn; each coset is represented by its smallest element.
  to_out_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (to_out_[a] >= 0) continue;
    int id = int(out_rep_.size());
    out_rep_.push_back(a);
    for (Elem i : inn_.members()) to_out_[aut_->mul(a, i)] = id;
  }
  int m = int(out_rep_.size());
  std::vector<int> otab(std::size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) otab[std::size_t(i) * m + j] = to_out_[aut_->mul(out_rep_[i], out_rep_[j])];
  out_ = std::make_shared<FiniteGroup>(FiniteGroup::from_table("Out", m, std::move(otab)));
}

Elem AutData::index_of_images(const std::vector<Elem>& generator_images) const {
  auto it = lookup_.find(generator_images);
  return it == lookup_.end() ? -1 : it->second;
}

Elem AutData::index_of(const GroupMap& m) const {
  std::vector<int> key;
  for (Elem g : gens_) key.push_back(m.image[g]);
  Elem a = index_of_images(key);
  if (a < 0) return -1;
  for (Elem u : subgroup_.members())
    if (maps_[a].image[u] != m.image[u]) return -1;
  return a;
}

Elem AutData::conjugation(Elem x) const {
  std::vector<int> key;
  for (Elem g : gens_) key.push_back(ambient_->conj(x, g));
  return lookup_.at(key);
}

ElementSet AutData::aut_from(const ElementSet& normalizing) const {
  ElementSet s(aut_->order());
  for (Elem x : normalizing.members()) s.insert(conjugation(x));
  return s;
}

ElementSet AutData::project(const ElementSet& auts) const {
  ElementSet s(out_->order());
  for (Elem a : auts.members()) s.insert(to_out_[a]);
  return s;
}

}  // namespace biset
