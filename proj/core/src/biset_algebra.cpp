#include "biset/biset_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "biset/parallel.hpp"
#include "biset/rational.hpp"

namespace biset {

std::string to_string(BisetTag tag) {
  switch (tag) {
    case BisetTag::Bifree: return "bifree";
    case BisetTag::LeftFree: return "leftfree";
    case BisetTag::Full: return "full";
  }
  return "?";
}

GoursatQuintuple quintuple_of(const SubgroupLattice& lat, const PairSet& l) {
  const auto& g = lat.group();
  const int n = g.order();
  ElementSet p1(n), k1(n), p2(n), k2(n);
  std::vector<Elem> eta(n, -1);
  for (auto c : l) {
    Elem a = Elem(c / n), b = Elem(c % n);
    p1.insert(a);
    p2.insert(b);
    if (b == 0) k1.insert(a);
    if (a == 0) k2.insert(b);
    if (eta[b] < 0 || a < eta[b]) eta[b] = a;
  }
  return {lat.index_of(p1), lat.index_of(k1), lat.index_of(p2), lat.index_of(k2), std::move(eta)};
}

PairSet subgroup_of(const SubgroupLattice& lat, const GoursatQuintuple& q) {
  const auto& g = lat.group();
  const int n = g.order();
  PairSet out;
  for (Elem b : lat.subgroup(q.p2).members())
    for (Elem k : lat.subgroup(q.k1).members()) out.push_back(std::uint32_t(g.mul(q.eta[b], k) * n + b));
  std::sort(out.begin(), out.end());
  return out;
}

PairSet twisted_diagonal(const FiniteGroup& g, const GroupMap& f) {
  PairSet out;
  for (Elem v : f.domain.members()) out.push_back(std::uint32_t(f(v) * g.order() + v));
  std::sort(out.begin(), out.end());
  return out;
}

PairSet compose_pairs(int n, const PairSet& l, const PairSet& m) {
  std::vector<std::vector<Elem>> bucket(n);
  for (auto c : m) bucket[c / n].push_back(Elem(c % n));
  std::vector<char> mark(std::size_t(n) * n, 0);
  PairSet out;
  for (auto c : l)
    for (Elem z : bucket[c % n]) {
      std::size_t code = std::size_t(c / n) * n + z;
      if (!mark[code]) {
        mark[code] = 1;
        out.push_back(std::uint32_t(code));
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet first_projection(int n, const PairSet& l) {
  ElementSet s(n);
  for (auto c : l) s.insert(Elem(c / n));
  return s;
}

ElementSet second_projection(int n, const PairSet& l) {
  ElementSet s(n);
  for (auto c : l) s.insert(Elem(c % n));
  return s;
}

namespace {

PairSet conjugate_pairs(const FiniteGroup& g, const PairSet& l, Elem x, Elem y) {
  const int n = g.order();
  PairSet out;
  out.reserve(l.size());
  for (auto c : l) out.push_back(std::uint32_t(g.conj(x, Elem(c / n)) * n + g.conj(y, Elem(c % n))));
  std::sort(out.begin(), out.end());
  return out;
}

PairSet swap_pairs(int n, const PairSet& l) {
  PairSet out;
  for (auto c : l) out.push_back((c % n) * n + c / n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void BisetAlgebra::add_class(PairSet rep) {
  if (lookup_.count(rep)) return;
  const auto& g = group();
  const int n = g.order();
  std::unordered_set<PairSet, PairSetHash> seen;
  std::vector<PairSet> conj;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto c = conjugate_pairs(g, rep, x, y);
      if (seen.insert(c).second) conj.push_back(std::move(c));
    }
  std::sort(conj.begin(), conj.end());
  BisetClass cls;
  cls.rep = conj.front();
  cls.quintuple = quintuple_of(*lat_, cls.rep);
  cls.left_free = lat_->order(cls.quintuple.k1) == 1;
  cls.bifree = cls.left_free && lat_->order(cls.quintuple.k2) == 1;
  cls.order = static_cast<int>(cls.rep.size());
  cls.class_size = static_cast<int>(conj.size());
  int id = dimension();
  for (const auto& c : conj) lookup_.emplace(c, id);
  classes_.push_back(std::move(cls));
  conjugates_.push_back(std::move(conj));
}

std::shared_ptr<const BisetAlgebra> BisetAlgebra::build(LatticePtr lat, BisetTag tag) {
  auto alg = std::shared_ptr<BisetAlgebra>(new BisetAlgebra());
  alg->lat_ = lat;
  alg->tag_ = tag;
  const auto& g = lat->group();
  const int n = g.order();
  if (std::size_t(n) * n > 14400) throw CapacityError("|G|^2 exceeds 14400 for " + g.name());

  if (tag == BisetTag::Full) {
    if (n > 8) throw CapacityError("full double Burnside ring needs |G| <= 8");
    auto prod = std::make_shared<const FiniteGroup>(FiniteGroup::direct_product(g, g));
    auto plat = SubgroupLattice::build(prod, n * n);
    for (int c = 0; c < plat->num_conj_classes(); ++c) {
      auto m = plat->subgroup(plat->class_rep(c)).members();
      alg->add_class(PairSet(m.begin(), m.end()));
    }
  } else {
    auto reps = lat->conj_class_reps();
    for (int v : reps)
      for (int w : reps) {
        if (lat->order(w) % lat->order(v)) continue;
        if (tag == BisetTag::Bifree && lat->order(w) != lat->order(v)) continue;
        for_each_map(lat->group_ptr(), lat->subgroup(w), lat->group_ptr(), lat->subgroup(v),
                     tag == BisetTag::Bifree ? MapKind::Bijective : MapKind::Surjective, [&](const GroupMap& f) {
                       alg->add_class(twisted_diagonal(g, f));
                       return true;
                     });
      }
  }

  // canonical order: by |L|, then representative
  std::vector<int> perm(alg->classes_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& x = alg->classes_[a];
    const auto& y = alg->classes_[b];
    if (x.order != y.order) return x.order < y.order;
    return x.rep < y.rep;
  });
  std::vector<BisetClass> classes;
  std::vector<std::vector<PairSet>> conj;
  for (int p : perm) {
    classes.push_back(std::move(alg->classes_[p]));
    conj.push_back(std::move(alg->conjugates_[p]));
  }
  alg->classes_ = std::move(classes);
  alg->conjugates_ = std::move(conj);
  alg->lookup_.clear();
  for (int i = 0; i < alg->dimension(); ++i)
    for (const auto& c : alg->conjugates_[i]) alg->lookup_.emplace(c, i);

  PairSet diag;
  for (Elem x = 0; x < n; ++x) diag.push_back(std::uint32_t(x * n + x));
  alg->identity_ = alg->find(diag);
  return alg;
}

int BisetAlgebra::find(const PairSet& s) const {
  auto it = lookup_.find(s);
  return it == lookup_.end() ? -1 : it->second;
}

int BisetAlgebra::dual(int i) const { return find(swap_pairs(group().order(), classes_[i].rep)); }

std::string BisetAlgebra::descriptor(int i) const {
  const auto& q = classes_[i].quintuple;
  std::ostringstream os;
  os << "L" << i << "(" << q.p1 << "," << q.k1 << ";" << q.p2 << "," << q.k2 << ")";
  return os.str();
}

std::vector<Term> BisetAlgebra::multiply_star(int i, int j) const {
  const auto& g = group();
  const int n = g.order();
  const auto& l = classes_[i].rep;
  const auto& m = classes_[j].rep;
  const auto& p2l = lat_->subgroup(classes_[i].quintuple.p2);
  const auto& p1m = lat_->subgroup(classes_[j].quintuple.p1);
  auto left = p2l.members();
  auto right = p1m.members();

  std::vector<std::vector<Elem>> bucket(n);
  std::vector<char> mark(std::size_t(n) * n, 0);
  std::vector<char> done(n, 0);
  std::vector<long> coeff(dimension(), 0);
  for (Elem x = 0; x < n; ++x) {
    if (done[x]) continue;
    for (Elem h : left)
      for (Elem k : right) done[g.mul(g.mul(h, x), k)] = 1;
    // L * (x,1)M
    for (auto& b : bucket) b.clear();
    for (auto c : m) bucket[g.conj(x, Elem(c / n))].push_back(Elem(c % n));
    PairSet prod;
    for (auto c : l) {
      Elem a = Elem(c / n), b = Elem(c % n);
      for (Elem z : bucket[b]) {
        std::size_t code = std::size_t(a) * n + z;
        if (!mark[code]) {
          mark[code] = 1;
          prod.push_back(std::uint32_t(code));
        }
      }
    }
    for (auto c : prod) mark[c] = 0;
    std::sort(prod.begin(), prod.end());
    int k = find(prod);
    if (k < 0) throw InconsistencyError("product left the " + to_string(tag_) + " span");
    ++coeff[k];
  }
  std::vector<Term> out;
  for (int k = 0; k < dimension(); ++k)
    if (coeff[k]) out.push_back({k, coeff[k]});
  return out;
}

namespace {

// Left cosets of a subgroup of G x G, with the action of G x G on them.
struct CosetSpace {
  int n;
  std::vector<int> coset_of;  // by code
  std::vector<std::uint32_t> rep;

  CosetSpace(const FiniteGroup& g, const PairSet& l) : n(g.order()), coset_of(std::size_t(n) * n, -1) {
    for (std::uint32_t c = 0; c < coset_of.size(); ++c) {
      if (coset_of[c] >= 0) continue;
      int id = int(rep.size());
      rep.push_back(c);
      for (auto s : l) coset_of[mul(g, c, s)] = id;
    }
  }
  std::uint32_t mul(const FiniteGroup& g, std::uint32_t x, std::uint32_t y) const {
    return std::uint32_t(g.mul(Elem(x / n), Elem(y / n)) * n + g.mul(Elem(x % n), Elem(y % n)));
  }
  int size() const { return int(rep.size()); }
  int act(const FiniteGroup& g, std::uint32_t by, int point) const { return coset_of[mul(g, by, rep[point])]; }
};

}  // namespace

std::vector<Term> BisetAlgebra::multiply_bruteforce(int i, int j) const {
  const auto& g = group();
  const int n = g.order();
  if (n > 16) throw CapacityError("brute-force biset product needs |G| <= 16");
  CosetSpace x(g, classes_[i].rep), y(g, classes_[j].rep);
  const int nx = x.size(), ny = y.size();
  // middle action: g.(x, y) = (x g^-1, g y) = ((1,g)x, (g,1)y)
  std::vector<int> orbit(std::size_t(nx) * ny, -1);
  std::vector<std::pair<int, int>> reps;
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) {
      if (orbit[std::size_t(a) * ny + b] >= 0) continue;
      int id = int(reps.size());
      reps.push_back({a, b});
      for (Elem h = 0; h < n; ++h) {
        int xa = x.act(g, std::uint32_t(h), a);
        int yb = y.act(g, std::uint32_t(h * n), b);
        orbit[std::size_t(xa) * ny + yb] = id;
      }
    }
  // outer action: (a,c)[x,y] = [(a,1)x, (1,c)y]
  const int nz = int(reps.size());
  std::vector<char> seen(nz, 0);
  std::vector<long> coeff(dimension(), 0);
  for (int z = 0; z < nz; ++z) {
    if (seen[z]) continue;
    PairSet stab;
    for (Elem a = 0; a < n; ++a)
      for (Elem c = 0; c < n; ++c) {
        int xa = x.act(g, std::uint32_t(a * n), reps[z].first);
        int yc = y.act(g, std::uint32_t(c), reps[z].second);
        int w = orbit[std::size_t(xa) * ny + yc];
        seen[w] = 1;
        if (w == z) stab.push_back(std::uint32_t(a * n + c));
      }
    int k = find(stab);
    if (k < 0) throw InconsistencyError("brute-force product left the " + to_string(tag_) + " span");
    ++coeff[k];
  }
  std::vector<Term> out;
  for (int k = 0; k < dimension(); ++k)
    if (coeff[k]) out.push_back({k, coeff[k]});
  return out;
}

bool BisetAlgebra::has_structure() const {
  std::lock_guard lock(mu_);
  return structure_ != nullptr;
}

void BisetAlgebra::install_structure(SparseAlgebra s) const {
  std::lock_guard lock(mu_);
  if (s.dimension() != dimension()) throw std::invalid_argument("structure tensor dimension mismatch");
  structure_ = std::make_shared<const SparseAlgebra>(std::move(s));
}

const SparseAlgebra& BisetAlgebra::structure() const {
  std::lock_guard lock(mu_);
  if (!structure_) {
    const int m = dimension();
    std::vector<std::vector<Term>> products(std::size_t(m) * m);
    parallel_for(m, [&](int i) {
      for (int j = 0; j < m; ++j) products[std::size_t(i) * m + j] = multiply_star(i, j);
    });
    structure_ = std::make_shared<const SparseAlgebra>(m, products, one());
  }
  return *structure_;
}

void BisetAlgebra::compute_marks() const {
  std::call_once(marks_once_, [this] {
    const int m = dimension();
    const long n = group().order();
    marks_.assign(std::size_t(m) * m, 0);
    parallel_for(m, [&](int k) {
      const auto& l = classes_[k].rep;
      for (int j = 0; j < m; ++j) {
        if (classes_[j].order < classes_[k].order || classes_[j].order % classes_[k].order) continue;
        long count = 0;
        for (const auto& c : conjugates_[j])
          if (std::includes(c.begin(), c.end(), l.begin(), l.end())) ++count;
        marks_[std::size_t(k) * m + j] = count * (n * n / (long(classes_[j].class_size) * classes_[j].order));
      }
    });
  });
}

long BisetAlgebra::mark(int k, int j) const {
  compute_marks();
  return marks_[std::size_t(k) * dimension() + j];
}

RVector BisetAlgebra::marks_of(const RVector& a) const {
  const int m = dimension();
  RVector out(m);
  for (int j = 0; j < m; ++j) {
    if (!sgn(a[j])) continue;
    for (int k = 0; k < m; ++k) {
      long v = mark(k, j);
      if (v) out[k] += a[j] * v;
    }
  }
  return out;
}

RVector BisetAlgebra::delta(const BurnsideElement& a, const BurnsideRing& b) const {
  const int n = group().order();
  RVector out(dimension());
  for (int c = 0; c < b.rank(); ++c) {
    if (!sgn(a.coords[c])) continue;
    PairSet d;
    for (Elem u : b.lattice().subgroup(b.lattice().class_rep(c)).members()) d.push_back(std::uint32_t(u * n + u));
    int k = find(d);
    if (k < 0) throw InconsistencyError("diagonal class missing");
    out[k] += a.coords[c];
  }
  return out;
}

RVector BisetAlgebra::one() const {
  RVector e(dimension());
  e[identity_] = 1;
  return e;
}

DoubleBurnsideElement DoubleBurnsideElement::basis(const AlgebraPtr& a, int i) {
  auto e = zero(a);
  e.coords[i] = 1;
  return e;
}

namespace {
void same_algebra(const DoubleBurnsideElement& a, const DoubleBurnsideElement& b) {
  if (a.algebra != b.algebra) throw std::invalid_argument("elements live in different algebras");
}
}  // namespace

DoubleBurnsideElement operator*(const DoubleBurnsideElement& a, const DoubleBurnsideElement& b) {
  same_algebra(a, b);
  return {a.algebra, a.algebra->multiply(a.coords, b.coords)};
}

DoubleBurnsideElement operator+(const DoubleBurnsideElement& a, const DoubleBurnsideElement& b) {
  same_algebra(a, b);
  return {a.algebra, add(a.coords, b.coords)};
}

DoubleBurnsideElement operator-(const DoubleBurnsideElement& a, const DoubleBurnsideElement& b) {
  same_algebra(a, b);
  return {a.algebra, sub(a.coords, b.coords)};
}

bool operator==(const DoubleBurnsideElement& a, const DoubleBurnsideElement& b) {
  return a.algebra == b.algebra && a.coords == b.coords;
}

RVector embed(const BisetAlgebra& from, const RVector& a, const BisetAlgebra& to) {
  RVector out(to.dimension());
  for (int i = 0; i < from.dimension(); ++i) {
    if (!sgn(a[i])) continue;
    int k = to.find(from.basis_class(i).rep);
    if (k < 0) throw std::invalid_argument("element support outside the target algebra");
    out[k] += a[i];
  }
  return out;
}

DoubleBurnsideElement embed(const DoubleBurnsideElement& a, const AlgebraPtr& target) {
  return {target, embed(*a.algebra, a.coords, *target)};
}

}  // namespace biset
