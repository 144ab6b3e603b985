#include "biset/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "biset/parallel.hpp"

namespace biset {

namespace {

std::vector<int> map_key(const SubgroupLattice& lat, int p, const GroupMap& phi) {
  std::vector<int> key{p};
  for (Elem x : lat.generators(p)) key.push_back(phi(x));
  return key;
}

GroupMap map_from_generators(const GroupPtr& s, const ElementSet& dom, const std::vector<Elem>& gens,
                             const std::vector<Elem>& images) {
  const FiniteGroup& g = *s;
  GroupMap m;
  m.from = m.to = s;
  m.domain = dom;
  m.image.assign(g.order(), -1);
  m.image[0] = 0;
  std::vector<Elem> list{0};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = g.mul(list[i], gens[k]);
      if (m.image[y] >= 0) continue;
      m.image[y] = g.mul(m.image[list[i]], images[k]);
      list.push_back(y);
    }
  return m;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool is_prime_power(long n, unsigned long& p) {
  auto ps = prime_divisors(static_cast<unsigned long>(n));
  if (ps.size() > 1) return false;
  p = ps.empty() ? 0 : ps.front();
  return true;
}

}  // namespace

FusionSystem FusionSystem::from_overgroup(GroupPtr g, const ElementSet& s, int max_order) {
  const FiniteGroup& G = *g;
  if (!is_subgroup(G, s)) throw std::invalid_argument("fusion: S is not a subgroup");
  FusionSystem fs;
  if (!is_prime_power(s.size(), fs.p_)) throw std::invalid_argument("fusion: S is not a p-group");
  fs.g_ = g;
  fs.to_g_ = s.members();
  const int n = int(fs.to_g_.size());
  std::vector<int> local(G.order(), -1);
  for (int i = 0; i < n; ++i) local[fs.to_g_[i]] = i;
  std::vector<int> table(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[std::size_t(a) * n + b] = local[G.mul(fs.to_g_[a], fs.to_g_[b])];
  std::string name = n == G.order() ? G.name() : "S" + std::to_string(n) + "<" + G.name();
  auto sp = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(name, n, std::move(table)));
  fs.ctx_ = GroupContext::create(sp, max_order);

  const auto& lat = fs.ctx_->lattice();
  UnionFind uf(lat.size());
  for (int p = 0; p < lat.size(); ++p) {
    auto mem = lat.subgroup(p).members();
    for (Elem x = 0; x < G.order(); ++x) {
      std::vector<Elem> img(mem.size());
      bool inside = true;
      for (std::size_t i = 0; i < mem.size() && inside; ++i) {
        img[i] = local[G.conj(x, fs.to_g_[mem[i]])];
        inside = img[i] >= 0;
      }
      if (!inside) continue;
      std::vector<int> key{p};
      for (Elem y : lat.generators(p)) key.push_back(img[std::lower_bound(mem.begin(), mem.end(), y) - mem.begin()]);
      if (!fs.maps_.insert(key).second) continue;
      uf.unite(p, lat.index_of(ElementSet::from_members(n, img)));
    }
  }
  fs.iso_class_of_.assign(lat.size(), -1);
  std::map<int, int> root_class;
  for (int p = 0; p < lat.size(); ++p) {
    auto [it, fresh] = root_class.emplace(uf.find(p), int(fs.iso_classes_.size()));
    if (fresh) fs.iso_classes_.push_back({});
    fs.iso_classes_[it->second].push_back(p);
    fs.iso_class_of_[p] = it->second;
  }
  return fs;
}

FusionSystem FusionSystem::sylow(GroupPtr g, unsigned long p, int max_order) {
  auto lat = SubgroupLattice::build(g, max_order);
  long part = 1;
  for (long n = g->order(); n % long(p) == 0; n /= long(p)) part *= long(p);
  for (int i = 0; i < lat->size(); ++i)
    if (lat->order(i) == part) return from_overgroup(g, lat->subgroup(i), max_order);
  throw InconsistencyError("fusion: no Sylow subgroup found");
}

bool FusionSystem::contains(const GroupMap& phi) const {
  const auto& lat = ctx_->lattice();
  int p = lat.index_of(phi.domain);
  if (p < 0) return false;
  return maps_.count(map_key(lat, p, phi)) > 0;
}

ElementSet FusionSystem::aut_f(int p) const {
  const AutData& au = ctx_->aut(p);
  ElementSet out(au.aut()->order());
  for (Elem a = 0; a < au.aut()->order(); ++a)
    if (contains(au.map(a))) out.insert(a);
  return out;
}

std::vector<GroupMap> FusionSystem::homs_to_s(int p) const {
  const auto& lat = ctx_->lattice();
  std::vector<std::vector<int>> keys;
  for (const auto& k : maps_)
    if (k.front() == p) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  std::vector<GroupMap> out;
  for (const auto& k : keys)
    out.push_back(map_from_generators(ctx_->group_ptr(), lat.subgroup(p), lat.generators(p),
                                      std::vector<Elem>(k.begin() + 1, k.end())));
  return out;
}

bool FusionSystem::is_inner() const {
  const auto& lat = ctx_->lattice();
  for (const auto& k : maps_) {
    auto phi = map_from_generators(ctx_->group_ptr(), lat.subgroup(k.front()), lat.generators(k.front()),
                                   std::vector<Elem>(k.begin() + 1, k.end()));
    bool inner = false;
    for (Elem x = 0; x < s().order() && !inner; ++x) {
      auto gens = lat.generators(k.front());
      inner = std::all_of(gens.begin(), gens.end(), [&](Elem y) { return s().conj(x, y) == phi(y); });
    }
    if (!inner) return false;
  }
  return true;
}

RVector FusionAlgebra::lift(const RVector& a) const {
  RVector out(bifree->dimension());
  for (int i = 0; i < dimension(); ++i) out[classes[i]] = a[i];
  return out;
}

FusionAlgebra fusion_algebra(const FusionSystem& fs) {
  FusionAlgebra fa;
  fa.bifree = fs.context()->algebra(BisetTag::Bifree);
  const BisetAlgebra& alg = *fa.bifree;
  const FiniteGroup& s = fs.s();
  const int n = s.order();
  std::vector<int> local(alg.dimension(), -1);
  for (int i = 0; i < alg.dimension(); ++i) {
    const PairSet& rep = alg.basis_class(i).rep;
    GroupMap phi;
    phi.from = phi.to = fs.context()->group_ptr();
    phi.domain = ElementSet(n);
    phi.image.assign(n, -1);
    for (auto code : rep) {
      Elem a = Elem(code / n), b = Elem(code % n);
      phi.domain.insert(b);
      phi.image[b] = a;
    }
    if (!fs.contains(phi)) continue;
    local[i] = fa.dimension();
    fa.classes.push_back(i);
  }
  const int d = fa.dimension();
  const SparseAlgebra& full = alg.structure();
  std::vector<std::vector<Term>> products(std::size_t(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const Term& t : full.product(fa.classes[i], fa.classes[j])) {
        if (local[t.index] < 0)
          throw InconsistencyError("fusion basis is not closed under multiplication: " + alg.descriptor(t.index));
        products[std::size_t(i) * d + j].push_back({local[t.index], t.coeff});
      }
  RVector one(d);
  if (local[alg.identity()] < 0) throw InconsistencyError("fusion basis misses the identity");
  one[local[alg.identity()]] = 1;
  fa.structure = SparseAlgebra(d, products, std::move(one));
  return fa;
}

FusionGhost::FusionGhost(const FusionSystem& fs, const FusionAlgebra& fa) : fs_(fs), fa_(fa) {
  const auto& lat = fs.context()->lattice();
  const FiniteGroup& s = fs.s();
  const BisetAlgebra& alg = *fa.bifree;
  for (const auto& cls : fs.iso_classes()) {
    int p = cls.front();
    reps_.push_back(p);
    auto homs = fs.homs_to_s(p);
    const auto& gens = lat.generators(p);
    auto key = [&](const GroupMap& m) {
      std::vector<int> k;
      for (Elem y : gens) k.push_back(m(y));
      return k;
    };
    // S-orbits under postcomposition with inner automorphisms of S
    std::map<std::vector<int>, int> orbit_of;
    std::vector<GroupMap> reps;
    for (const auto& h : homs) {
      if (orbit_of.count(key(h))) continue;
      int o = int(reps.size());
      reps.push_back(h);
      for (Elem x = 0; x < s.order(); ++x) {
        std::vector<int> k;
        for (Elem y : gens) k.push_back(s.conj(x, h(y)));
        orbit_of.emplace(k, o);
      }
    }
    const AutData& au = fs.context()->aut(p);
    auto autf = fs.aut_f(p).members();
    std::vector<std::vector<int>> act(reps.size(), std::vector<int>(au.aut()->order(), -1));
    for (std::size_t o = 0; o < reps.size(); ++o)
      for (Elem w : autf) {
        std::vector<int> k;
        for (Elem y : gens) k.push_back(reps[o](au.map(w)(y)));
        act[o][w] = orbit_of.at(k);
      }
    const int m = int(reps.size());
    std::vector<int> entries(std::size_t(m) * m);
    std::vector<long> cent(m);
    for (int l = 0; l < m; ++l) {
      cent[l] = lat.order(lat.centralizer(lat.index_of(reps[l].image_set())));
      for (int r = 0; r < m; ++r) {
        int c = alg.find(twisted_diagonal(s, compose(reps[l], inverse(reps[r]))));
        if (c < 0) throw InconsistencyError("fusion ghost: twisted diagonal not in the bifree basis");
        entries[std::size_t(l) * m + r] = c;
      }
    }
    orbits_.push_back(std::move(reps));
    act_.push_back(std::move(act));
    entry_class_.push_back(std::move(entries));
    centralizer_.push_back(std::move(cent));
  }
}

std::vector<RMatrix> FusionGhost::sigma(const RVector& a, FusionNormalization norm) const {
  const BisetAlgebra& alg = *fa_.bifree;
  const auto& lat = fs_.context()->lattice();
  std::vector<RMatrix> out;
  for (int c = 0; c < num_components(); ++c) {
    const int m = component_size(c);
    RMatrix x(m, m);
    long fixed = lat.order(lat.centralizer(reps_[c]));
    for (int l = 0; l < m; ++l)
      for (int r = 0; r < m; ++r) {
        int k = entry_class_[c][std::size_t(l) * m + r];
        Rational v;
        for (int j = 0; j < fa_.dimension(); ++j)
          if (sgn(a[j])) v += a[j] * alg.mark(k, fa_.classes[j]);
        x(l, r) = v / (norm == FusionNormalization::PerRow ? centralizer_[c][l] : fixed);
      }
    out.push_back(std::move(x));
  }
  return out;
}

bool FusionGhost::is_equivariant(const std::vector<RMatrix>& x) const {
  for (int c = 0; c < num_components(); ++c) {
    const int m = component_size(c);
    auto autf = fs_.aut_f(reps_[c]).members();
    for (Elem w : autf)
      for (int l = 0; l < m; ++l)
        for (int r = 0; r < m; ++r)
          if (x[c](act_[c][l][w], act_[c][r][w]) != x[c](l, r)) return false;
  }
  return true;
}

int FusionGhost::rank(FusionNormalization norm) const {
  const int d = fa_.dimension();
  int cols = 0;
  for (int c = 0; c < num_components(); ++c) cols += component_size(c) * component_size(c);
  RMatrix m(d, cols);
  for (int i = 0; i < d; ++i) {
    RVector e(d);
    e[i] = 1;
    auto x = sigma(e, norm);
    int col = 0;
    for (const auto& part : x)
      for (int l = 0; l < part.rows(); ++l)
        for (int r = 0; r < part.cols(); ++r) m(i, col++) = part(l, r);
  }
  return biset::rank(std::move(m));
}

bool FusionGhost::is_multiplicative(FusionNormalization norm) const {
  const int d = fa_.dimension();
  std::vector<std::vector<RMatrix>> images(d);
  for (int i = 0; i < d; ++i) {
    RVector e(d);
    e[i] = 1;
    images[i] = sigma(e, norm);
  }
  std::vector<char> ok(std::size_t(d) * d, 1);
  parallel_for(d * d, [&](int ij) {
    int i = ij / d, j = ij % d;
    RVector prod(d);
    for (const Term& t : fa_.structure.product(i, j)) prod[t.index] += t.coeff;
    auto lhs = sigma(prod, norm);
    for (int c = 0; c < num_components(); ++c)
      if (lhs[c] != images[i][c] * images[j][c]) ok[ij] = 0;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c; });
}

std::vector<long> fusion_indices(const FusionSystem& fs, int p) {
  const auto& ctx = *fs.context();
  const auto& lat = ctx.lattice();
  const AutData& au = ctx.aut(p);
  ElementSet autf = fs.aut_f(p);
  const auto& gens = au.generators();
  std::vector<long> out;
  for (const auto& phi : fs.homs_to_s(p)) {
    int q = lat.index_of(phi.image_set());
    const AutData& aq = ctx.aut(q);
    GroupMap back = inverse(phi);
    ElementSet conj(au.aut()->order());
    for (Elem a : ctx.aut_g(q).members()) {
      std::vector<Elem> img;
      for (Elem y : gens) img.push_back(back(aq.map(a)(phi(y))));
      Elem b = au.index_of_images(img);
      if (b < 0) throw InconsistencyError("fusion: conjugated automorphism is not an automorphism");
      conj.insert(b);
    }
    out.push_back(autf.size() / autf.intersect(conj).size());
  }
  return out;
}

bool fusion_hypothesis(const FusionSystem& fs, const CoefficientRing& ring) {
  if (!ring.is_non_unit(fs.prime())) return false;
  for (const auto& cls : fs.iso_classes())
    for (long idx : fusion_indices(fs, cls.front()))
      for (auto q : prime_divisors(static_cast<unsigned long>(idx)))
        if (!ring.is_non_unit(q)) return false;
  return true;
}

bool fusion_indices_invariant(const FusionSystem& fs) {
  for (const auto& cls : fs.iso_classes()) {
    auto first = fusion_indices(fs, cls.front());
    std::sort(first.begin(), first.end());
    for (int p : cls) {
      auto v = fusion_indices(fs, p);
      std::sort(v.begin(), v.end());
      if (v != first) return false;
    }
  }
  return true;
}

FusionCenterReport fusion_center_connected(const FusionSystem& fs, const FusionAlgebra& fa,
                                           const CoefficientRing& ring) {
  FusionCenterReport r;
  r.dimension = fa.dimension();
  r.hypothesis = fusion_hypothesis(fs, ring);
  auto center = center_oracle(fa.structure, 4000);
  r.center_dimension = int(center.center_basis.size());
  r.primitive_idempotents = center.primitive_idempotents;
  auto search = connectedness_search(r.primitive_idempotents, ring);
  r.integral_subsets = search.integral_subsets;
  r.connected = search.connected;
  return r;
}

}  // namespace biset
