#include "biset/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "biset/catalog.hpp"
#include "biset/center.hpp"
#include "biset/ghost.hpp"
#include "biset/parallel.hpp"

namespace biset {

namespace {

std::string pair_label(const SubgroupLattice& lat, int u, int chi) {
  return "(U" + std::to_string(u) + "[" + std::to_string(lat.order(u)) + "],chi" + std::to_string(chi) + ")";
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

std::vector<std::vector<int>> closure_classes(int n, const std::function<bool(int, int)>& rel) {
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel(i, j)) uf.unite(i, j);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : groups) out.push_back(std::move(v));
  return out;
}

bool same_vectors(std::vector<RVector> a, std::vector<RVector> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

RVector sum_of(const std::vector<RVector>& v, const std::vector<int>& idx, int dim) {
  RVector s(dim);
  for (int i : idx) s = add(s, v[i]);
  return s;
}

}  // namespace

Rational injbar_multiplicity(const GroupContext& ctx, int iso_cls, int chi) {
  InjOrbitBasis b = build_inj_orbits(ctx, iso_cls);
  const AutData& au = ctx.aut(b.u);
  const FiniteGroup& out = *au.out();
  const auto& table = ctx.out_table(b.u);
  Rational s;
  for (Elem o = 0; o < out.order(); ++o) {
    Elem a = au.out_rep(o);
    long fixed = 0;
    for (int x = 0; x < b.size(); ++x) fixed += b.action[x][a] == x;
    s += fixed * table.value(chi, out.inv(o));
  }
  return s / out.order();
}

std::vector<Rational> chi_on(const GroupContext& ctx, int u, int chi, int v) {
  return transport_values(ctx.out_table(u).values(chi), ctx.aut(u), ctx.aut(v), ctx.iso_from_rep(v));
}

Rational outg_multiplicity(const GroupContext& ctx, int iso_cls, int chi, int block) {
  const auto& lat = ctx.lattice();
  int u = lat.iso_rep(iso_cls);
  int v = lat.class_rep(lat.iso_members(iso_cls)[block]);
  auto values = chi_on(ctx, u, chi, v);
  const ElementSet& og = ctx.out_g(v);
  Rational s;
  for (Elem y : og.members()) s += values[y];
  return s / og.size();
}

std::vector<EGPair> compute_EG(const GroupContext& ctx) {
  const auto& lat = ctx.lattice();
  std::vector<EGPair> out;
  for (int k = 0; k < lat.num_iso_classes(); ++k) {
    int u = lat.iso_rep(k);
    const auto& table = ctx.out_table(u);
    int nblocks = int(lat.iso_members(k).size());
    for (int chi = 0; chi < table.num_orbits(); ++chi) {
      bool by_injbar = sgn(injbar_multiplicity(ctx, k, chi)) != 0;
      bool by_outg = false;
      for (int b = 0; b < nblocks && !by_outg; ++b) by_outg = sgn(outg_multiplicity(ctx, k, chi, b)) != 0;
      if (by_injbar != by_outg)
        throw InconsistencyError("membership routes disagree for " + pair_label(lat, u, chi));
      if (by_injbar) out.push_back({k, u, chi, pair_label(lat, u, chi)});
    }
  }
  std::sort(out.begin(), out.end(), [&](const EGPair& a, const EGPair& b) {
    if (lat.order(a.u) != lat.order(b.u)) return lat.order(a.u) < lat.order(b.u);
    if (a.u != b.u) return a.u < b.u;
    return a.chi < b.chi;
  });
  return out;
}

RVector bifree_idempotent(const GroupContext& ctx, const EGPair& p, int block) {
  const GhostSpace& gs = ctx.ghost();
  return gs.sigma_inverse(gs.echi(p.iso_cls, p.chi, block));
}

BlockChecks verify_blocks(const BisetAlgebra& alg, const std::vector<Block>& blocks, const CoefficientRing& ring) {
  BlockChecks c;
  const int d = alg.dimension();
  std::vector<RVector> f;
  for (const auto& b : blocks) f.push_back(b.idempotent);
  c.idempotent = c.central = c.orthogonal = c.integrality = true;
  std::vector<char> idem(f.size()), cent(f.size());
  parallel_for(int(f.size()), [&](int i) {
    idem[i] = alg.multiply(f[i], f[i]) == f[i];
    cent[i] = alg.is_central(f[i]);
  });
  for (std::size_t i = 0; i < f.size(); ++i) {
    c.idempotent = c.idempotent && idem[i];
    c.central = c.central && cent[i];
    for (const auto& x : f[i]) c.integrality = c.integrality && ring.contains(x);
    for (std::size_t j = 0; j < f.size(); ++j)
      if (i != j && !is_zero(alg.multiply(f[i], f[j]))) c.orthogonal = false;
  }
  RVector total(d);
  for (const auto& x : f) total = add(total, x);
  c.sum_to_one = total == alg.one();
  return c;
}

std::vector<unsigned long> non_unit_primes(const GroupContext& ctx, const CoefficientRing& ring) {
  std::vector<unsigned long> out;
  for (auto p : prime_divisors(ctx.group().order()))
    if (ring.is_non_unit(p)) out.push_back(p);
  return out;
}

bool out_primes_non_units(const GroupContext& ctx, const CoefficientRing& ring) {
  const auto& lat = ctx.lattice();
  for (int k = 0; k < lat.num_iso_classes(); ++k)
    for (auto p : prime_divisors(ctx.aut(lat.iso_rep(k)).out()->order()))
      if (!ring.is_non_unit(p)) return false;
  return true;
}

std::vector<std::vector<int>> atoms(const std::vector<std::vector<int>>& subsets, int k) {
  std::vector<std::vector<int>> out;
  std::vector<char> covered(k, 0);
  std::vector<std::vector<int>> sorted = subsets;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& s : sorted) {
    if (s.empty()) continue;
    bool fresh = std::none_of(s.begin(), s.end(), [&](int i) { return covered[i]; });
    if (!fresh) continue;
    for (int i : s) covered[i] = 1;
    out.push_back(s);
  }
  if (std::count(covered.begin(), covered.end(), 1) != k)
    throw InconsistencyError("integral subsums do not cover every candidate");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> refinement_failures(const GroupContext& ctx, const std::vector<unsigned long>& primes) {
  const auto& lat = ctx.lattice();
  const auto& alg = ctx.ghost().algebra();
  auto pairs = compute_EG(ctx);
  std::vector<RVector> e;
  for (const auto& p : pairs) e.push_back(bifree_idempotent(ctx, p));
  std::vector<int> bad;
  for (int k = 0; k < lat.num_iso_classes(); ++k) {
    if (!is_pi_perfect(lat, lat.iso_rep(k), primes)) continue;
    RVector lhs = alg.delta(ctx.burnside().epsilon_hat_pi(k, primes), ctx.burnside());
    RVector rhs(alg.dimension());
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (ctx.iso_class_of(pi_residual(lat, pairs[i].u, primes)) == k) rhs = add(rhs, e[i]);
    if (lhs != rhs) bad.push_back(k);
  }
  return bad;
}

BlockPartition bifree_blocks(const GroupContext& ctx, const CoefficientRing& ring) {
  const auto& lat = ctx.lattice();
  BlockPartition bp;
  bp.algebra = ctx.algebra(BisetTag::Bifree);
  bp.ring = ring;
  bp.pairs = compute_EG(ctx);
  const BisetAlgebra& alg = *bp.algebra;
  const int d = alg.dimension();
  const int k = int(bp.pairs.size());
  std::vector<RVector> e(k);
  parallel_for(k, [&](int i) { e[i] = bifree_idempotent(ctx, bp.pairs[i]); });

  if (ring.kind() == CoefficientRing::Kind::Rationals) {
    for (int i = 0; i < k; ++i) bp.blocks.push_back({bp.pairs[i].label, {i}, e[i]});
    bp.checks = verify_blocks(alg, bp.blocks, ring);
    auto center = center_oracle(alg.structure(), 4000);
    bp.checks.primitive = same_vectors(center.primitive_idempotents, e);
    return bp;
  }

  auto primes = non_unit_primes(ctx, ring);
  for (int w = 0; w < lat.num_iso_classes(); ++w) {
    int u = lat.iso_rep(w);
    if (!is_pi_perfect(lat, u, primes)) continue;
    Block b;
    b.label = "W=U" + std::to_string(u) + "[" + std::to_string(lat.order(u)) + "]";
    b.idempotent = alg.delta(ctx.burnside().epsilon_hat_pi(w, primes), ctx.burnside());
    for (int i = 0; i < k; ++i)
      if (ctx.iso_class_of(pi_residual(lat, bp.pairs[i].u, primes)) == w) b.pairs.push_back(i);
    if (sum_of(e, b.pairs, d) != b.idempotent)
      throw InconsistencyError("block idempotent differs from the sum of its field idempotents: " + b.label);
    bp.blocks.push_back(std::move(b));
  }
  bp.checks = verify_blocks(alg, bp.blocks, ring);
  bp.checks.hypothesis = out_primes_non_units(ctx, ring);
  // primitive iff no proper subsum of the field idempotents inside a block is integral
  bp.checks.primitive = true;
  for (const auto& b : bp.blocks) {
    std::vector<RVector> cand;
    for (int i : b.pairs) cand.push_back(e[i]);
    if (!connectedness_search(cand, ring).connected) bp.checks.primitive = false;
  }
  return bp;
}

DirectRelation::DirectRelation(const GroupContext& ctx, const std::vector<EGPair>& pairs) : n_(int(pairs.size())) {
  AlgebraPtr lf = ctx.algebra(BisetTag::LeftFree);
  const BisetAlgebra& bif = ctx.ghost().algebra();
  const SparseAlgebra& s = lf->structure();
  const int d = lf->dimension();
  idem_.resize(n_);
  parallel_for(n_, [&](int i) { idem_[i] = embed(bif, bifree_idempotent(ctx, pairs[i]), *lf); });

  // integer multiples a = D e with D the common denominator
  std::vector<Integer> den(n_, 1);
  std::vector<std::vector<std::pair<int, long>>> scaled(n_);
  for (int i = 0; i < n_; ++i) {
    for (const auto& x : idem_[i]) mpz_lcm(den[i].get_mpz_t(), den[i].get_mpz_t(), x.get_den().get_mpz_t());
    for (int c = 0; c < d; ++c) {
      if (!sgn(idem_[i][c])) continue;
      Integer v = idem_[i][c].get_num() * (den[i] / idem_[i][c].get_den());
      if (!v.fits_slong_p()) throw CapacityError("relation: idempotent coordinates too large");
      scaled[i].push_back({c, v.get_si()});
    }
  }
  auto checked = [](__int128 v) {
    if (v > __int128(1) << 62 || v < -(__int128(1) << 62)) throw CapacityError("relation: matrix entry overflow");
    return long(v);
  };
  // left[p][k*d + j]: coefficient of b_k in a_p b_j
  std::vector<std::vector<long>> left(n_);
  parallel_for(n_, [&](int p) {
    std::vector<__int128> m(std::size_t(d) * d, 0);
    for (auto [i, a] : scaled[p])
      for (int j = 0; j < d; ++j)
        for (const Term& t : s.product(i, j)) m[std::size_t(t.index) * d + j] += __int128(a) * t.coeff;
    left[p].resize(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) left[p][x] = checked(m[x]);
  });
  dims_.assign(std::size_t(n_) * n_, 0);
  for (int q = 0; q < n_; ++q) {
    // right[j*d + k]: coefficient of b_j in b_k a_q
    std::vector<__int128> m(std::size_t(d) * d, 0);
    for (auto [i, a] : scaled[q])
      for (int k = 0; k < d; ++k)
        for (const Term& t : s.product(k, i)) m[std::size_t(t.index) * d + k] += __int128(a) * t.coeff;
    std::vector<long> right(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) right[x] = checked(m[x]);
    parallel_for(n_, [&](int p) {
      __int128 tr = 0;
      for (int k = 0; k < d; ++k) {
        const long* row = left[p].data() + std::size_t(k) * d;
        for (int j = 0; j < d; ++j) tr += __int128(row[j]) * right[std::size_t(j) * d + k];
      }
      Integer scale = den[p] * den[q];
      if (!scale.fits_slong_p()) throw CapacityError("relation: denominators too large");
      long sc = scale.get_si();
      if (tr % sc != 0) throw InconsistencyError("relation: trace of a projection is not an integer");
      dims_[std::size_t(p) * n_ + q] = long(tr / sc);
    });
  }
}

bool relation_direct(const GroupContext& ctx, const EGPair& p, const EGPair& q) {
  DirectRelation r(ctx, {p, q});
  return r.related(0, 1);
}

BlockPartition leftfree_blocks(const GroupContext& ctx, const CoefficientRing& ring) {
  BlockPartition bp;
  bp.algebra = ctx.algebra(BisetTag::LeftFree);
  bp.ring = ring;
  bp.pairs = compute_EG(ctx);
  const BisetAlgebra& alg = *bp.algebra;
  const BisetAlgebra& bif = ctx.ghost().algebra();
  const int d = alg.dimension();
  const int k = int(bp.pairs.size());
  DirectRelation rel(ctx, bp.pairs);
  bp.relation.assign(k, {});
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if (rel.related(p, q)) bp.relation[p].push_back(q);
  auto classes = closure_classes(k, [&](int p, int q) { return rel.related(p, q); });
  std::vector<Block> field_blocks;
  for (const auto& c : classes) {
    Block b;
    b.pairs = c;
    b.label = bp.pairs[c.front()].label;
    b.idempotent = sum_of(rel.idempotents(), c, d);
    field_blocks.push_back(std::move(b));
  }

  auto center = center_oracle(alg.structure(), 4000);
  bp.center_primitives = int(center.primitive_idempotents.size());
  std::vector<char> in_bifree(d, 0);
  for (int i = 0; i < d; ++i) in_bifree[i] = alg.basis_class(i).bifree;
  for (const auto& f : center.primitive_idempotents)
    for (int i = 0; i < d; ++i)
      if (!in_bifree[i] && sgn(f[i])) bp.center_in_bifree = false;
  if (bp.center_in_bifree && bif.dimension() != int(std::count(in_bifree.begin(), in_bifree.end(), 1)))
    throw InconsistencyError("bifree classes do not embed in the left-free algebra");
  std::vector<RVector> fq;
  for (const auto& b : field_blocks) fq.push_back(b.idempotent);
  bool matches_center = same_vectors(center.primitive_idempotents, fq);

  if (ring.kind() == CoefficientRing::Kind::Rationals) {
    bp.blocks = std::move(field_blocks);
    bp.checks = verify_blocks(alg, bp.blocks, ring);
    bp.checks.primitive = matches_center;
    return bp;
  }
  auto search = connectedness_search(fq, ring);
  for (const auto& a : atoms(search.integral_subsets, int(fq.size()))) {
    Block b;
    for (int i : a) b.pairs.insert(b.pairs.end(), field_blocks[i].pairs.begin(), field_blocks[i].pairs.end());
    std::sort(b.pairs.begin(), b.pairs.end());
    b.label = bp.pairs[b.pairs.front()].label;
    b.idempotent = sum_of(fq, a, d);
    bp.blocks.push_back(std::move(b));
  }
  bp.checks = verify_blocks(alg, bp.blocks, ring);
  bp.checks.primitive = matches_center;
  bp.checks.hypothesis = out_primes_non_units(ctx, ring);
  return bp;
}

LAlphaData build_l_alpha(const GroupContext& ctx, int v, int vp, const GroupMap& alpha) {
  const AutData& av = ctx.aut(v);
  const AutData& avp = ctx.aut(vp);
  const FiniteGroup& autp = *avp.aut();
  LAlphaData l;
  l.v = v;
  l.vp = vp;
  l.alpha = alpha;
  ElementSet ker = alpha.kernel();
  auto kmem = ker.members();
  std::vector<Elem> pre;
  for (Elem x : av.generators()) {
    Elem found = -1;
    for (Elem y : alpha.domain.members())
      if (alpha(y) == x) {
        found = y;
        break;
      }
    if (found < 0) throw std::invalid_argument("L_alpha: alpha is not surjective");
    pre.push_back(found);
  }
  l.aut_ker = ElementSet(autp.order());
  l.alpha_star.assign(autp.order(), -1);
  for (Elem w = 0; w < autp.order(); ++w) {
    const GroupMap& m = avp.map(w);
    if (!std::all_of(kmem.begin(), kmem.end(), [&](Elem x) { return ker.contains(m(x)); })) continue;
    l.aut_ker.insert(w);
    std::vector<Elem> key;
    for (Elem y : pre) key.push_back(alpha(m(y)));
    Elem a = av.index_of_images(key);
    if (a < 0) throw InconsistencyError("L_alpha: induced map is not an automorphism");
    l.alpha_star[w] = a;
    l.l_alpha.push_back({a, w});
  }
  std::set<std::pair<Elem, Elem>> bar;
  for (auto [a, w] : l.l_alpha) bar.insert({av.to_out(a), avp.to_out(w)});
  l.lbar.assign(bar.begin(), bar.end());
  return l;
}

std::vector<std::pair<Elem, Elem>> l_alpha_bruteforce(const GroupContext& ctx, int v, int vp, const GroupMap& alpha) {
  const AutData& av = ctx.aut(v);
  const AutData& avp = ctx.aut(vp);
  auto dom = alpha.domain.members();
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < av.aut()->order(); ++a)
    for (Elem w = 0; w < avp.aut()->order(); ++w) {
      const GroupMap& ma = av.map(a);
      const GroupMap& mw = avp.map(w);
      if (std::all_of(dom.begin(), dom.end(), [&](Elem y) { return ma(alpha(y)) == alpha(mw(y)); }))
        out.push_back({a, w});
    }
  return out;
}

std::vector<GroupMap> epimorphisms(const GroupContext& ctx, int vp, int v, bool reduce) {
  const auto& lat = ctx.lattice();
  auto all = enumerate_maps(ctx.group_ptr(), lat.subgroup(vp), ctx.group_ptr(), lat.subgroup(v), MapKind::Surjective);
  if (!reduce) return all;
  const AutData& av = ctx.aut(v);
  const AutData& avp = ctx.aut(vp);
  const auto& gens = avp.generators();
  auto key_of = [&](const GroupMap& m) {
    std::vector<int> k;
    for (Elem y : gens) k.push_back(m(y));
    return k;
  };
  std::unordered_map<std::vector<int>, int, VectorHash> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(key_of(all[i]), int(i));
  auto ag = ctx.aut_g(v).members();
  auto agp = ctx.aut_g(vp).members();
  std::vector<char> seen(all.size(), 0);
  std::vector<GroupMap> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (seen[i]) continue;
    out.push_back(all[i]);
    for (Elem a : ag)
      for (Elem w : agp) {
        const GroupMap& ma = av.map(a);
        const GroupMap& mwi = avp.map(avp.aut()->inv(w));
        std::vector<int> k;
        for (Elem y : gens) k.push_back(ma(all[i](mwi(y))));
        seen[index.at(k)] = 1;
      }
  }
  return out;
}

Rational criterion_value(const GroupContext& ctx, const std::vector<Rational>& chi_v,
                         const std::vector<Rational>& chi_vp, const LAlphaData& l) {
  const FiniteGroup& ov = *ctx.aut(l.v).out();
  const FiniteGroup& ovp = *ctx.aut(l.vp).out();
  auto og = ctx.out_g(l.v).members();
  auto ogp = ctx.out_g(l.vp).members();
  const int m = ovp.order();
  std::vector<char> in(std::size_t(ov.order()) * m, 0);
  Rational s;
  for (Elem x : og)
    for (Elem y : ogp)
      for (auto [a, b] : l.lbar) {
        Elem s1 = ov.mul(x, a), s2 = ovp.mul(y, b);
        char& f = in[std::size_t(s1) * m + s2];
        if (f) continue;
        f = 1;
        s += chi_v[ov.inv(s1)] * chi_vp[s2];
      }
  return s;
}

bool relation_character(const GroupContext& ctx, const EGPair& p, const EGPair& q, bool reduce) {
  const auto& lat = ctx.lattice();
  for (int cv : lat.iso_members(p.iso_cls)) {
    int v = lat.class_rep(cv);
    auto chi_v = chi_on(ctx, p.u, p.chi, v);
    for (int cvp : lat.iso_members(q.iso_cls)) {
      int vp = lat.class_rep(cvp);
      auto chi_vp = chi_on(ctx, q.u, q.chi, vp);
      for (const auto& alpha : epimorphisms(ctx, vp, v, reduce))
        if (sgn(criterion_value(ctx, chi_v, chi_vp, build_l_alpha(ctx, v, vp, alpha)))) return true;
    }
  }
  return false;
}

namespace {

// Out(V', ker alpha) -> Out(V) induced by alpha_*.
GroupMap induced_out_map(const GroupContext& ctx, const LAlphaData& l) {
  const AutData& av = ctx.aut(l.v);
  const AutData& avp = ctx.aut(l.vp);
  GroupMap q;
  q.from = avp.out();
  q.to = av.out();
  q.domain = ElementSet(q.from->order());
  q.image.assign(q.from->order(), -1);
  for (Elem w : l.aut_ker.members()) {
    Elem y = avp.to_out(w);
    Elem x = av.to_out(l.alpha_star[w]);
    if (q.image[y] >= 0 && q.image[y] != x) throw InconsistencyError("alpha_* does not descend to Out");
    q.domain.insert(y);
    q.image[y] = x;
  }
  return q;
}

}  // namespace

Rational inflate_induce(const GroupContext& ctx, const LAlphaData& l, const std::vector<Rational>& chi,
                        const std::vector<Rational>& chi_p) {
  GroupMap q = induced_out_map(ctx, l);
  SubgroupCharacter c{q.to, q.to->all(), chi};
  SubgroupCharacter cp{q.from, q.from->all(), chi_p};
  auto up = induce_to(inflate(restrict_to(c, q.image_set()), q), q.from->all());
  return inner_product(cp, up);
}

OutGEquivalences trivial_outg_equivalences(const GroupContext& ctx, const LAlphaData& l,
                                           const std::vector<Rational>& chi, const std::vector<Rational>& chi_p) {
  if (ctx.out_g(l.v).size() != 1 || ctx.out_g(l.vp).size() != 1)
    throw std::invalid_argument("trivial Out_G equivalences: Out_G is not trivial");
  const FiniteGroup& ov = *ctx.aut(l.v).out();
  OutGEquivalences r;
  r.sum_over_lbar = sgn(criterion_value(ctx, chi, chi_p, l)) != 0;
  Rational s;
  for (auto [x, y] : l.lbar) s += chi[ov.inv(x)] * chi_p[y];
  r.restriction = sgn(s) != 0;
  GroupMap q = induced_out_map(ctx, l);
  SubgroupCharacter c{q.to, q.to->all(), chi};
  SubgroupCharacter cp{q.from, q.from->all(), chi_p};
  auto down = induce_to(deflate(restrict_to(cp, q.domain), q), q.to->all());
  r.deflate_induce = sgn(inner_product(c, down)) != 0;
  r.inflate_induce = sgn(inflate_induce(ctx, l, chi, chi_p)) != 0;
  if (!r.agree()) throw InconsistencyError("trivial Out_G conditions disagree");
  return r;
}

ElementaryAbelianReport elementary_abelian_report(int p, int n) {
  if (n < 1 || p < 2) throw std::invalid_argument("elementary abelian report: need p >= 2, n >= 1");
  long order = 1;
  for (int i = 0; i < n; ++i) order *= p;
  if (order > 16) throw CapacityError("elementary abelian report: p^n exceeds 16");
  std::vector<Perm> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<int> cyc(p);
    std::iota(cyc.begin(), cyc.end(), i * p + 1);
    gens.push_back(perm_from_cycles(p * n, {cyc}));
  }
  auto g = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_permutations("E" + std::to_string(order), p * n, gens));
  auto ctx = GroupContext::create(g);
  const auto& lat = ctx->lattice();
  ElementaryAbelianReport r;
  r.p = p;
  r.n = n;
  r.pairs = compute_EG(*ctx);
  const int k = int(r.pairs.size());
  r.relation.assign(k, std::vector<char>(k, 0));
  r.parabolic.assign(k, std::vector<char>(k, 0));
  parallel_for(k * k, [&](int ij) {
    int i = ij / k, j = ij % k;
    const EGPair& a = r.pairs[i];
    const EGPair& b = r.pairs[j];
    r.relation[i][j] = relation_character(*ctx, a, b);
    if (lat.order(a.u) > lat.order(b.u)) return;
    auto epis = enumerate_maps(ctx->group_ptr(), lat.subgroup(b.u), ctx->group_ptr(), lat.subgroup(a.u),
                               MapKind::Surjective);
    LAlphaData l = build_l_alpha(*ctx, a.u, b.u, epis.front());
    r.parabolic[i][j] =
        sgn(inflate_induce(*ctx, l, ctx->out_table(a.u).values(a.chi), ctx->out_table(b.u).values(b.chi))) != 0;
  });
  r.agree = r.relation == r.parabolic;
  for (int i = 0; i < k; ++i) {
    int u = r.pairs[i].u;
    const AutData& au = ctx->aut(u);
    const FiniteGroup& aut = *au.aut();
    // Borel subgroup: stabilizer of the flag spanned by initial segments of the generators
    const auto& ug = au.generators();
    std::vector<ElementSet> flag;
    for (std::size_t t = 1; t <= ug.size(); ++t)
      flag.push_back(generate(*g, std::span<const Elem>(ug.data(), t)));
    ElementSet borel(aut.order());
    for (Elem a = 0; a < aut.order(); ++a) {
      const GroupMap& m = au.map(a);
      bool ok = std::all_of(flag.begin(), flag.end(), [&](const ElementSet& f) {
        auto mem = f.members();
        return std::all_of(mem.begin(), mem.end(), [&](Elem x) { return f.contains(m(x)); });
      });
      if (ok) borel.insert(a);
    }
    // Out(U) = Aut(U) for abelian U
    auto perm = induce_to(SubgroupCharacter::trivial(au.out(), au.project(borel)), au.out()->all());
    SubgroupCharacter chi{au.out(), au.out()->all(), ctx->out_table(u).values(r.pairs[i].chi)};
    if (sgn(inner_product(perm, chi))) r.unipotent.push_back(i);
  }
  r.classes = closure_classes(k, [&](int i, int j) { return bool(r.relation[i][j]); });
  r.unipotent_is_class = std::find(r.classes.begin(), r.classes.end(), r.unipotent) != r.classes.end();
  return r;
}

}  // namespace biset
