#include "biset/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace biset {

ClassFunction::ClassFunction(GroupPtr g, std::vector<Cyclotomic> values)
    : group_(std::move(g)), values_(std::move(values)) {
  if (values_.size() != group_->classes().size()) throw std::invalid_argument("class function length");
}

ClassFunction ClassFunction::trivial(GroupPtr g) {
  std::vector<Cyclotomic> v(g->classes().size(), Cyclotomic(1));
  return ClassFunction(std::move(g), std::move(v));
}

ClassFunction ClassFunction::regular(GroupPtr g) {
  std::vector<Cyclotomic> v(g->classes().size(), Cyclotomic(0));
  v[0] = Cyclotomic(g->order());
  return ClassFunction(std::move(g), std::move(v));
}

bool ClassFunction::is_rational() const {
  for (const auto& v : values_)
    if (!v.is_rational()) return false;
  return true;
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  for (const auto& x : values_) v.push_back(x.conj());
  return ClassFunction(group_, std::move(v));
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] + b.values_[i]);
  return ClassFunction(a.group_, std::move(v));
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] * b.values_[i]);
  return ClassFunction(a.group_, std::move(v));
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw std::invalid_argument("inner product of class functions on different groups");
  const auto& cls = a.group()->classes();
  Cyclotomic s;
  for (std::size_t i = 0; i < cls.size(); ++i) s += Cyclotomic(cls[i].size) * a.on_class(int(i)) * b.on_class(int(i)).conj();
  return s * Cyclotomic(Rational(1, a.group()->order()));
}

Cyclotomic eval_subset_sum(const ClassFunction& chi, const ElementSet& subset) {
  std::vector<long> count(chi.group()->classes().size(), 0);
  for (Elem x : subset.members()) ++count[chi.group()->class_of(x)];
  Cyclotomic s;
  for (std::size_t i = 0; i < count.size(); ++i)
    if (count[i]) s += Cyclotomic(count[i]) * chi.on_class(int(i));
  return s;
}

namespace {

using i64 = long long;

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>((__int128)a * b % p); }

i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  auto fac = prime_divisors(static_cast<unsigned long>(p - 1));
  for (i64 g = 2;; ++g) {
    bool ok = true;
    for (auto q : fac)
      if (powmod(g, (p - 1) / i64(q), p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

using ModMatrix = std::vector<std::vector<i64>>;

// Nullspace (column vectors) of an r x c matrix over F_p.
std::vector<std::vector<i64>> nullspace_mod(ModMatrix m, int cols, i64 p) {
  int rows = int(m.size());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[row]);
    i64 inv = invmod(m[row][col], p);
    for (auto& x : m[row]) x = mulmod(x, inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == row || !m[i][col]) continue;
      i64 f = m[i][col];
      for (int j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - mulmod(f, m[row][j], p)) % p + p) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> piv(cols, false);
  for (int c : pivots) piv[c] = true;
  std::vector<std::vector<i64>> basis;
  for (int f = 0; f < cols; ++f) {
    if (piv[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool cyclotomic_less(const Cyclotomic& a, const Cyclotomic& b, int e) {
  auto x = a.lift(e).coefficients(), y = b.lift(e).coefficients();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace

std::vector<ClassFunction> character_table(const GroupPtr& gp, int max_order) {
  const FiniteGroup& G = *gp;
  int n = G.order();
  if (n > max_order) throw CapacityError("character table: group order exceeds limit");
  const auto& cls = G.classes();
  int r = int(cls.size());
  int e = G.exponent();
  i64 p = 1;
  {
    i64 k = 1;
    double lo = 2 * std::sqrt(double(n)) + 1;
    for (;; ++k) {
      i64 c = k * e + 1;
      if (c > lo && c > n && is_prime(c)) {
        p = c;
        break;
      }
    }
  }
  std::vector<int> inv_class(r);
  for (int i = 0; i < r; ++i) inv_class[i] = G.class_of(G.inv(cls[i].representative));

  // M_i[j][k] = a_ijk = #{x in C_i : x^-1 g_k in C_j}
  std::vector<ModMatrix> mats(r, ModMatrix(r, std::vector<i64>(r, 0)));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      Elem gk = cls[k].representative;
      for (Elem x : cls[i].members) ++mats[i][G.class_of(G.mul(G.inv(x), gk))][k];
    }

  // Split F_p^r into common eigenspaces.
  std::vector<std::vector<std::vector<i64>>> spaces;  // each: list of basis vectors
  {
    std::vector<std::vector<i64>> id;
    for (int i = 0; i < r; ++i) {
      std::vector<i64> v(r, 0);
      v[i] = 1;
      id.push_back(v);
    }
    spaces.push_back(id);
  }
  for (int i = 1; i < r; ++i) {
    std::vector<std::vector<std::vector<i64>>> next;
    for (auto& sp : spaces) {
      int d = int(sp.size());
      if (d == 1) {
        next.push_back(sp);
        continue;
      }
      int found = 0;
      // A_i B as r x d
      ModMatrix ab(r, std::vector<i64>(d, 0));
      for (int row = 0; row < r; ++row)
        for (int c = 0; c < d; ++c) {
          i64 s = 0;
          for (int k = 0; k < r; ++k) s = (s + mulmod(mats[i][row][k], sp[c][k], p)) % p;
          ab[row][c] = s;
        }
      for (i64 lam = 0; lam < p && found < d; ++lam) {
        ModMatrix m = ab;
        for (int row = 0; row < r; ++row)
          for (int c = 0; c < d; ++c) m[row][c] = ((m[row][c] - mulmod(lam, sp[c][row], p)) % p + p) % p;
        auto ns = nullspace_mod(m, d, p);
        if (ns.empty()) continue;
        std::vector<std::vector<i64>> sub;
        for (const auto& coef : ns) {
          std::vector<i64> v(r, 0);
          for (int c = 0; c < d; ++c)
            for (int k = 0; k < r; ++k) v[k] = (v[k] + mulmod(coef[c], sp[c][k], p)) % p;
          sub.push_back(std::move(v));
        }
        found += int(sub.size());
        next.push_back(std::move(sub));
      }
      if (found != d) throw InconsistencyError("character table: eigenspace split failed");
    }
    spaces = std::move(next);
  }
  if (int(spaces.size()) != r) throw InconsistencyError("character table: common eigenvectors not one-dimensional");

  i64 z = powmod(primitive_root(p), (p - 1) / e, p);
  i64 inv_e = invmod(e, p);
  std::vector<ClassFunction> chars;
  for (auto& sp : spaces) {
    auto w = sp[0];
    i64 w1 = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, w1, p);
    i64 s = 0;
    for (int j = 0; j < r; ++j) s = (s + mulmod(mulmod(w[j], w[inv_class[j]], p), invmod(cls[j].size, p), p)) % p;
    i64 d2 = mulmod(n % p, invmod(s, p), p);
    i64 deg = -1;
    for (i64 d = 1; d * d <= n; ++d)
      if ((d * d) % p == d2) deg = d;
    if (deg < 0) throw InconsistencyError("character table: degree recovery failed");
    std::vector<i64> theta(r);
    for (int j = 0; j < r; ++j) theta[j] = mulmod(mulmod(w[j], deg, p), invmod(cls[j].size, p), p);
    std::vector<Cyclotomic> vals;
    for (int j = 0; j < r; ++j) {
      std::vector<Rational> coeff(e);
      for (int k = 0; k < e; ++k) {
        i64 m = 0;
        for (int l = 0; l < e; ++l) {
          i64 t = theta[G.power_class(j, l)];
          m = (m + mulmod(t, powmod(z, (i64(e) * e - i64(l) * k) % e, p), p)) % p;
        }
        m = mulmod(m, inv_e, p);
        if (m > deg) throw InconsistencyError("character table: eigenvalue multiplicity out of range");
        coeff[k] = Rational(static_cast<long>(m));
      }
      vals.push_back(Cyclotomic::from_exponents(e, coeff));
    }
    chars.emplace_back(gp, std::move(vals));
  }
  std::sort(chars.begin(), chars.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    bool ta = true, tb = true;
    for (const auto& v : a.values()) ta = ta && v == Cyclotomic(1);
    for (const auto& v : b.values()) tb = tb && v == Cyclotomic(1);
    if (ta != tb) return ta;
    Rational da = a.degree().rational(), db = b.degree().rational();
    if (da != db) return da < db;
    for (std::size_t j = 0; j < a.values().size(); ++j) {
      if (a.values()[j] == b.values()[j]) continue;
      return cyclotomic_less(a.values()[j], b.values()[j], e);
    }
    return false;
  });
  // exact verification
  Rational sumsq = 0;
  for (const auto& c : chars) sumsq += c.degree().rational() * c.degree().rational();
  if (sumsq != n) throw InconsistencyError("character table: degrees do not square-sum to |G|");
  for (std::size_t a = 0; a < chars.size(); ++a)
    for (std::size_t b = a; b < chars.size(); ++b) {
      Cyclotomic ip = inner_product(chars[a], chars[b]);
      if (!(ip == Cyclotomic(a == b ? 1 : 0))) throw InconsistencyError("character table: orthogonality failed");
    }
  return chars;
}

RationalCharacterTable::RationalCharacterTable(GroupPtr g, int max_order) : group_(std::move(g)) {
  irr_ = character_table(group_, max_order);
  const FiniteGroup& G = *group_;
  int e = G.exponent();
  int k = int(irr_.size());
  std::vector<int> orbit_of(k, -1);
  for (int i = 0; i < k; ++i) {
    if (orbit_of[i] >= 0) continue;
    int id = int(orbits_.size());
    orbits_.push_back({});
    for (int s = 1; s <= e; ++s) {
      if (std::gcd(s, e) != 1) continue;
      // psi^sigma_s(g) = psi(g^s)
      std::vector<Cyclotomic> v;
      for (int c = 0; c < int(G.classes().size()); ++c) v.push_back(irr_[i].on_class(G.power_class(c, s)));
      for (int j = 0; j < k; ++j)
        if (irr_[j].values() == v && orbit_of[j] < 0) {
          orbit_of[j] = id;
          orbits_[id].push_back(j);
        }
    }
    std::sort(orbits_[id].begin(), orbits_[id].end());
  }
  for (const auto& orb : orbits_) {
    ClassFunction s = irr_[orb[0]];
    for (std::size_t t = 1; t < orb.size(); ++t) s = s + irr_[orb[t]];
    if (!s.is_rational()) throw InconsistencyError("Galois orbit sum is not rational");
    std::vector<Rational> vals(G.order());
    for (Elem x = 0; x < G.order(); ++x) vals[x] = s.rational_at(x);
    sums_.push_back(std::move(s));
    values_.push_back(std::move(vals));
  }
}

Rational RationalCharacterTable::member_degree(int i) const { return irr_[orbits_[i][0]].degree().rational(); }

std::vector<Rational> RationalCharacterTable::central_idempotent(int i) const {
  const FiniteGroup& G = *group_;
  Rational f = member_degree(i) / G.order();
  std::vector<Rational> out(G.order());
  for (Elem x = 0; x < G.order(); ++x) out[x] = f * values_[i][G.inv(x)];
  return out;
}

int RationalCharacterTable::find_orbit(const std::vector<Rational>& per_element) const {
  for (int i = 0; i < num_orbits(); ++i)
    if (values_[i] == per_element) return i;
  return -1;
}

std::vector<Rational> group_algebra_multiply(const FiniteGroup& g, const std::vector<Rational>& a,
                                             const std::vector<Rational>& b) {
  std::vector<Rational> c(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (sgn(a[x]) == 0) continue;
    for (Elem y = 0; y < g.order(); ++y)
      if (sgn(b[y]) != 0) c[g.mul(x, y)] += a[x] * b[y];
  }
  return c;
}

SubgroupCharacter SubgroupCharacter::trivial(const GroupPtr& g, const ElementSet& h) {
  SubgroupCharacter c{g, h, std::vector<Rational>(g->order())};
  for (Elem x : h.members()) c.values[x] = 1;
  return c;
}

SubgroupCharacter SubgroupCharacter::from_orbit_sum(const RationalCharacterTable& t, int orbit) {
  return {t.group(), t.group()->all(), t.values(orbit)};
}

SubgroupCharacter restrict_to(const SubgroupCharacter& chi, const ElementSet& sub) {
  if (!sub.subset_of(chi.domain)) throw std::invalid_argument("restriction target is not a subgroup of the domain");
  SubgroupCharacter c{chi.ambient, sub, std::vector<Rational>(chi.ambient->order())};
  for (Elem x : sub.members()) c.values[x] = chi.values[x];
  return c;
}

SubgroupCharacter induce_to(const SubgroupCharacter& chi, const ElementSet& over) {
  if (!chi.domain.subset_of(over)) throw std::invalid_argument("induction source is not contained in the target");
  const FiniteGroup& A = *chi.ambient;
  SubgroupCharacter c{chi.ambient, over, std::vector<Rational>(A.order())};
  Rational inv = Rational(1, chi.domain.size());
  auto mem = over.members();
  for (Elem x : mem) {
    Rational s = 0;
    for (Elem k : mem) {
      Elem y = A.conj(k, x);
      if (chi.domain.contains(y)) s += chi.values[y];
    }
    c.values[x] = s * inv;
  }
  return c;
}

SubgroupCharacter inflate(const SubgroupCharacter& chi, const GroupMap& q) {
  if (q.to != chi.ambient) throw std::invalid_argument("inflation map does not land in the character's group");
  SubgroupCharacter c{q.from, q.domain, std::vector<Rational>(q.from->order())};
  for (Elem x : q.domain.members()) c.values[x] = chi.values[q(x)];
  return c;
}

SubgroupCharacter deflate(const SubgroupCharacter& chi, const GroupMap& q) {
  if (q.from != chi.ambient) throw std::invalid_argument("deflation map does not start at the character's group");
  ElementSet img = q.image_set();
  SubgroupCharacter c{q.to, img, std::vector<Rational>(q.to->order())};
  int k = q.kernel().size();
  for (Elem x : q.domain.members()) c.values[q(x)] += chi.values[x];
  for (Elem y : img.members()) c.values[y] /= k;
  return c;
}

Rational inner_product(const SubgroupCharacter& a, const SubgroupCharacter& b) {
  if (!(a.domain == b.domain)) throw std::invalid_argument("inner product on different subgroups");
  const FiniteGroup& A = *a.ambient;
  Rational s = 0;
  for (Elem x : a.domain.members()) s += a.values[x] * b.values[A.inv(x)];
  return s / a.domain.size();
}

namespace {

// For each element of Out(V), the element of Out(U) it corresponds to under l.
std::vector<Elem> transport_index(const AutData& aut_u, const AutData& aut_v, const GroupMap& l) {
  GroupMap linv = inverse(l);
  const auto& ugens = aut_u.generators();
  int m = aut_v.out()->order();
  std::vector<Elem> out(m);
  for (Elem o = 0; o < m; ++o) {
    const GroupMap& w = aut_v.map(aut_v.out_rep(o));
    std::vector<Elem> key;
    for (Elem u : ugens) key.push_back(linv(w(l(u))));
    Elem a = aut_u.index_of_images(key);
    if (a < 0) throw std::invalid_argument("transport: map is not an isomorphism");
    out[o] = aut_u.to_out(a);
  }
  return out;
}

}  // namespace

ClassFunction transport(const ClassFunction& chi, const AutData& aut_u, const AutData& aut_v, const GroupMap& l) {
  auto idx = transport_index(aut_u, aut_v, l);
  const FiniteGroup& OV = *aut_v.out();
  std::vector<Cyclotomic> vals;
  for (const auto& c : OV.classes()) vals.push_back(chi(idx[c.representative]));
  return ClassFunction(aut_v.out(), std::move(vals));
}

std::vector<Rational> transport_values(const std::vector<Rational>& chi, const AutData& aut_u,
                                       const AutData& aut_v, const GroupMap& l) {
  auto idx = transport_index(aut_u, aut_v, l);
  std::vector<Rational> out(idx.size());
  for (std::size_t o = 0; o < idx.size(); ++o) out[o] = chi[idx[o]];
  return out;
}

}  // namespace biset
