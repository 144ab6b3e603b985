#include "biset/ghost.hpp"

#include <algorithm>
#include <map>

namespace biset {

InjOrbitBasis build_inj_orbits(const GroupContext& ctx, int iso_cls) {
  const auto& lat = ctx.lattice();
  const auto& g = ctx.group();
  InjOrbitBasis b;
  b.iso_cls = iso_cls;
  b.u = lat.iso_rep(iso_cls);
  const AutData& au = ctx.aut(b.u);
  const FiniteGroup& aut = *au.aut();
  const int na = aut.order();
  std::vector<int> rep_aut;
  for (int cls : lat.iso_members(iso_cls)) {
    int v = lat.class_rep(cls);
    int blk = int(b.blocks.size());
    b.blocks.push_back(v);
    b.block_start.push_back(b.size());
    const GroupMap& l0 = ctx.iso_from_rep(v);
    std::vector<Elem> inv(g.order(), -1);
    for (Elem x : l0.domain.members()) inv[l0(x)] = x;
    // A_V = l0^-1 Aut_G(V) l0
    ElementSet av(na);
    for (Elem n : lat.subgroup(lat.normalizer(v)).members()) {
      std::vector<Elem> key;
      for (Elem x : au.generators()) key.push_back(inv[g.conj(n, l0(x))]);
      av.insert(au.index_of_images(key));
    }
    auto avm = av.members();
    std::vector<int> coset(na, -1);
    for (Elem a = 0; a < na; ++a) {
      if (coset[a] >= 0) continue;
      int o = b.size();
      for (Elem h : avm) coset[aut.mul(h, a)] = o;
      b.reps.push_back(compose(l0, au.map(a)));
      b.block_of.push_back(blk);
      rep_aut.push_back(a);
    }
    b.lambda0.push_back(l0);
    b.lambda0_inv.push_back(std::move(inv));
    b.coset_of.push_back(std::move(coset));
  }
  b.block_start.push_back(b.size());
  b.action.assign(b.size(), std::vector<int>(na));
  for (int o = 0; o < b.size(); ++o)
    for (Elem a = 0; a < na; ++a) b.action[o][a] = b.coset_of[b.block_of[o]][aut.mul(rep_aut[o], a)];
  return b;
}

GhostElement operator*(const GhostElement& a, const GhostElement& b) {
  GhostElement c;
  for (std::size_t i = 0; i < a.parts.size(); ++i) c.parts.push_back(a.parts[i] * b.parts[i]);
  return c;
}

GhostElement operator+(const GhostElement& a, const GhostElement& b) {
  GhostElement c;
  for (std::size_t i = 0; i < a.parts.size(); ++i) c.parts.push_back(a.parts[i] + b.parts[i]);
  return c;
}

GhostSpace::GhostSpace(const GroupContext& ctx) : ctx_(ctx), alg_(ctx.algebra(BisetTag::Bifree)) {
  const auto& lat = ctx.lattice();
  const auto& g = ctx.group();
  const int n = g.order();
  for (int k = 0; k < lat.num_iso_classes(); ++k) bases_.push_back(build_inj_orbits(ctx, k));
  first_entry_.assign(alg_->dimension(), {-1, -1, -1});
  for (int c = 0; c < num_components(); ++c) {
    const auto& b = bases_[c];
    const int s = b.size();
    auto members = lat.subgroup(b.u).members();
    std::vector<int> cls(std::size_t(s) * s);
    std::vector<long> div(s);
    for (int l = 0; l < s; ++l) {
      int img = lat.index_of(b.reps[l].image_set());
      div[l] = lat.order(lat.centralizer(img));
      for (int m = 0; m < s; ++m) {
        PairSet p;
        for (Elem u : members) p.push_back(std::uint32_t(b.reps[l](u) * n + b.reps[m](u)));
        std::sort(p.begin(), p.end());
        int k = alg_->find(p);
        if (k < 0) throw InconsistencyError("ghost entry outside the bifree classes");
        cls[std::size_t(l) * s + m] = k;
        if (first_entry_[k][0] < 0) first_entry_[k] = {c, l, m};
      }
    }
    entry_class_.push_back(std::move(cls));
    divisor_.push_back(std::move(div));
  }
  for (const auto& f : first_entry_)
    if (f[0] < 0) throw InconsistencyError("bifree class missing from the ghost entries");
}

int GhostSpace::orbit_of(int c, const GroupMap& lambda) const {
  const auto& lat = ctx_.lattice();
  const auto& g = ctx_.group();
  const auto& b = bases_[c];
  const AutData& au = ctx_.aut(b.u);
  int img = lat.index_of(lambda.image_set());
  int v = lat.class_rep(lat.conj_class(img));
  int blk = int(std::find(b.blocks.begin(), b.blocks.end(), v) - b.blocks.begin());
  if (blk == int(b.blocks.size())) throw std::invalid_argument("injection from the wrong isomorphism class");
  Elem t = g.inv(lat.transporter(img));
  std::vector<Elem> key;
  for (Elem x : au.generators()) key.push_back(b.lambda0_inv[blk][g.conj(t, lambda(x))]);
  return b.coset_of[blk][au.index_of_images(key)];
}

GhostElement GhostSpace::zero() const {
  GhostElement z;
  for (const auto& b : bases_) z.parts.emplace_back(b.size(), b.size());
  return z;
}

GhostElement GhostSpace::identity() const {
  GhostElement z;
  for (const auto& b : bases_) z.parts.push_back(RMatrix::identity(b.size()));
  return z;
}

bool GhostSpace::is_equivariant(const GhostElement& x) const {
  for (int c = 0; c < num_components(); ++c) {
    const auto& b = bases_[c];
    const AutData& au = ctx_.aut(b.u);
    const auto& m = x.parts[c];
    for (Elem o = 0; o < au.out()->order(); ++o) {
      Elem a = au.out_rep(o);
      for (int l = 0; l < b.size(); ++l)
        for (int k = 0; k < b.size(); ++k)
          if (m(b.action[l][a], b.action[k][a]) != m(l, k)) return false;
    }
  }
  return true;
}

GhostElement GhostSpace::sigma(const RVector& a) const {
  RVector marks = alg_->marks_of(a);
  GhostElement x = zero();
  for (int c = 0; c < num_components(); ++c) {
    const int s = bases_[c].size();
    for (int l = 0; l < s; ++l)
      for (int m = 0; m < s; ++m) x.parts[c](l, m) = marks[entry_class(c, l, m)] / divisor_[c][l];
  }
  return x;
}

RVector GhostSpace::sigma_inverse(const GhostElement& x) const {
  const int d = alg_->dimension();
  RVector marks(d), a(d);
  for (int k = 0; k < d; ++k) {
    auto [c, l, m] = first_entry_[k];
    marks[k] = x.parts[c](l, m) * divisor_[c][l];
  }
  // mark(k, j) vanishes unless |L_k| < |L_j| or k = j
  for (int k = d - 1; k >= 0; --k) {
    Rational r = marks[k];
    for (int j = k + 1; j < d; ++j)
      if (sgn(a[j])) r -= a[j] * alg_->mark(k, j);
    a[k] = r / alg_->mark(k, k);
  }
  if (!(sigma(a) == x)) throw InconsistencyError("ghost element outside the image of sigma");
  return a;
}

GhostElement GhostSpace::echi(int c, int orbit, int block) const {
  const auto& b = bases_[c];
  const AutData& au = ctx_.aut(b.u);
  auto coeff = ctx_.out_table(b.u).central_idempotent(orbit);
  GhostElement x = zero();
  auto& m = x.parts[c];
  for (int mu = 0; mu < b.size(); ++mu) {
    if (block >= 0 && b.block_of[mu] != block) continue;
    for (Elem o = 0; o < au.out()->order(); ++o) m(b.action[mu][au.out_rep(o)], mu) += coeff[o];
  }
  return x;
}

RVector GhostSpace::rho(const GhostElement& x) const {
  const auto& lat = ctx_.lattice();
  const int n = ctx_.group().order();
  RVector out(alg_->dimension());
  for (int k = 0; k < alg_->dimension(); ++k) {
    const auto& rep = alg_->basis_class(k).rep;
    std::vector<Elem> phi(n, -1);
    for (auto p : rep) phi[p % n] = Elem(p / n);
    int w = lat.index_of(second_projection(n, rep));
    int c = ctx_.iso_class_of(w);
    const GroupMap& mu0 = ctx_.iso_from_rep(w);
    GroupMap lambda = mu0;
    for (Elem u : mu0.domain.members()) lambda.image[u] = phi[mu0(u)];
    out[k] = x.parts[c](orbit_of(c, lambda), orbit_of(c, mu0));
  }
  return out;
}

RVector GhostSpace::rho_formula(int c, int orbit, int block) const {
  const auto& b = bases_[c];
  const int v = b.blocks[block];
  const AutData& au = ctx_.aut(b.u);
  const AutData& av = ctx_.aut(v);
  const auto& table = ctx_.out_table(b.u);
  auto chi_v = transport_values(table.values(orbit), au, av, b.lambda0[block]);
  const FiniteGroup& outv = *av.out();
  auto outg = ctx_.out_g(v).members();
  Rational coef = table.member_degree(orbit) / au.out()->order();
  RVector out(alg_->dimension());
  std::vector<char> seen(alg_->dimension(), 0);
  for (Elem w = 0; w < av.aut()->order(); ++w) {
    Elem wi = outv.inv(av.to_out(w));
    Rational s;
    for (Elem y : outg) s += chi_v[outv.mul(wi, y)];
    int k = alg_->find(twisted_diagonal(ctx_.group(), av.map(w)));
    if (k < 0) throw InconsistencyError("triple outside the bifree classes");
    Rational val = coef * s;
    if (seen[k] && out[k] != val) throw InconsistencyError("rho formula not constant on an orbit");
    seen[k] = 1;
    out[k] = val;
  }
  return out;
}

RVector triple_multiply(const BisetAlgebra& alg, const RVector& x, const RVector& y) {
  const auto& lat = alg.lattice();
  const int n = alg.group().order();
  const int d = alg.dimension();
  std::vector<int> xs, ys;
  for (int i = 0; i < d; ++i) {
    if (sgn(x[i])) xs.push_back(i);
    if (sgn(y[i])) ys.push_back(i);
  }
  // conjugate triples of the right factor, bucketed by their target subgroup
  std::map<int, std::map<int, std::vector<const PairSet*>>> right;
  for (int j : ys)
    for (const auto& t : alg.conjugates(j)) right[j][lat.index_of(first_projection(n, t))].push_back(&t);
  RVector out(d);
  std::vector<long> acc(d);
  for (int i : xs) {
    for (int j : ys) {
      std::fill(acc.begin(), acc.end(), 0);
      for (const auto& t : alg.conjugates(i)) {
        int v = lat.index_of(second_projection(n, t));
        auto it = right[j].find(v);
        if (it == right[j].end()) continue;
        long cv = lat.order(lat.centralizer(v));
        for (const PairSet* s : it->second) {
          int k = alg.find(compose_pairs(n, t, *s));
          if (k < 0) throw InconsistencyError("triple product outside the algebra");
          acc[k] += cv;
        }
      }
      Rational xy = x[i] * y[j];
      for (int k = 0; k < d; ++k)
        if (acc[k]) out[k] += xy * Rational(acc[k]) / (long(n) * alg.basis_class(k).class_size);
    }
  }
  for (auto& v : out) v.canonicalize();
  return out;
}

}  // namespace biset
