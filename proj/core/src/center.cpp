#include "biset/center.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "biset/finite_group.hpp"
#include "biset/polynomial.hpp"
#include "biset/rational.hpp"

namespace biset {

SparseAlgebra::SparseAlgebra(int dim, const std::vector<std::vector<Term>>& products, RVector one)
    : dim_(dim), one_(std::move(one)) {
  offsets_.assign(std::size_t(dim) * dim + 1, 0);
  std::size_t total = 0;
  for (std::size_t k = 0; k < products.size(); ++k) {
    offsets_[k] = total;
    total += products[k].size();
  }
  offsets_.back() = total;
  terms_.reserve(total);
  for (const auto& p : products) terms_.insert(terms_.end(), p.begin(), p.end());
}

RVector SparseAlgebra::multiply(const RVector& a, const RVector& b) const {
  RVector c(dim_);
  std::vector<int> nb;
  for (int j = 0; j < dim_; ++j)
    if (sgn(b[j])) nb.push_back(j);
  Rational t;
  for (int i = 0; i < dim_; ++i) {
    if (!sgn(a[i])) continue;
    for (int j : nb) {
      t = a[i] * b[j];
      for (const auto& term : product(i, j)) c[term.index] += t * term.coeff;
    }
  }
  return c;
}

bool SparseAlgebra::commutes_with_basis(const RVector& x) const {
  std::vector<int> nz;
  for (int i = 0; i < dim_; ++i)
    if (sgn(x[i])) nz.push_back(i);
  RVector d(dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int i : nz) {
      for (const auto& t : product(i, j)) d[t.index] += x[i] * t.coeff;
      for (const auto& t : product(j, i)) d[t.index] -= x[i] * t.coeff;
    }
    for (auto& v : d) {
      if (sgn(v)) return false;
    }
  }
  return true;
}

namespace {

using u64 = std::uint64_t;
using i64 = long long;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return u64((unsigned __int128)a * b % p); }
  u64 from(long v) const {
    long r = v % long(p);
    return r < 0 ? u64(r + long(p)) : u64(r);
  }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

// Reduced row echelon form over F_p; returns pivot columns.
std::vector<int> rref_mod(std::vector<std::vector<u64>>& rows, int cols, const Field& F) {
  std::vector<int> piv;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    u64 inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      u64 f = rows[i][c];
      for (int j = 0; j < cols; ++j)
        if (rows[r][j]) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

bool reconstruct(u64 u, u64 p, Rational& out) {
  // find a/b with a = b u mod p and |a|, b below sqrt(p/2)
  __int128 r0 = p, r1 = u, t0 = 0, t1 = 1;
  __int128 bound = 1;
  while (bound * bound * 2 < (__int128)p) bound *= 2;
  bound /= 2;
  while (r1 >= bound) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return false;
  __int128 a = r1, b = t1;
  if (b < 0) {
    a = -a;
    b = -b;
  }
  if (b >= bound) return false;
  out = Rational(Integer(long(a)), Integer(long(b)));
  out.canonicalize();
  return true;
}

std::vector<RVector> center_basis_mod(const SparseAlgebra& A, u64 p) {
  Field F{p};
  int m = A.dimension();
  std::vector<std::vector<u64>> N(m, std::vector<u64>(m, 0));
  for (int i = 0; i < m; ++i) N[i][i] = 1;
  for (int j = 0; j < m && N.size() > 1; ++j) {
    int d = int(N.size());
    // augmented rows [C_t | e_t]
    std::vector<std::vector<u64>> aug(d, std::vector<u64>(m + d, 0));
    bool any = false;
    for (int t = 0; t < d; ++t) {
      auto& row = aug[t];
      for (int i = 0; i < m; ++i) {
        u64 v = N[t][i];
        if (!v) continue;
        for (const auto& term : A.product(i, j)) row[term.index] = F.add(row[term.index], F.mul(v, F.from(term.coeff)));
        for (const auto& term : A.product(j, i)) row[term.index] = F.sub(row[term.index], F.mul(v, F.from(term.coeff)));
      }
      for (int k = 0; k < m && !any; ++k) any = row[k] != 0;
      row[m + t] = 1;
    }
    if (!any) continue;
    auto piv = rref_mod(aug, m + d, F);
    std::vector<std::vector<u64>> next;
    for (std::size_t r = 0; r < aug.size(); ++r) {
      if (piv[r] < m) continue;
      std::vector<u64> v(m, 0);
      for (int t = 0; t < d; ++t) {
        u64 y = aug[r][m + t];
        if (!y) continue;
        for (int i = 0; i < m; ++i)
          if (N[t][i]) v[i] = F.add(v[i], F.mul(y, N[t][i]));
      }
      next.push_back(std::move(v));
    }
    rref_mod(next, m, F);
    N = std::move(next);
  }
  std::vector<RVector> out;
  for (const auto& row : N) {
    RVector v(m);
    for (int i = 0; i < m; ++i) {
      if (!row[i]) continue;
      if (!reconstruct(row[i], p, v[i])) return {};
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Multiplication table of the center in its echelon basis.
struct CenterRing {
  const SparseAlgebra* A;
  std::vector<RVector> basis;
  std::vector<int> pivots;

  int dim() const { return int(basis.size()); }
  RVector coords(const RVector& v) const {
    RVector c(dim());
    for (int t = 0; t < dim(); ++t) c[t] = v[pivots[t]];
    return c;
  }
  RVector embed(const RVector& c) const {
    RVector v(A->dimension());
    for (int t = 0; t < dim(); ++t) axpy(v, c[t], basis[t]);
    return v;
  }
  RVector mul(const RVector& a, const RVector& b) const { return coords(A->multiply(embed(a), embed(b))); }
};

QPoly minimal_poly_mod(const CenterRing& Z, const std::vector<std::vector<RVector>>& table, const RVector& a,
                       const std::vector<RVector>& rad, int target, bool& generates) {
  int d = Z.dim();
  auto mul = [&](const RVector& x, const RVector& y) {
    RVector c(d);
    for (int s = 0; s < d; ++s) {
      if (!sgn(x[s])) continue;
      for (int t = 0; t < d; ++t)
        if (sgn(y[t])) axpy(c, x[s] * y[t], table[s][t]);
    }
    return c;
  };
  RVector one = Z.coords(Z.A->one());
  std::vector<RVector> powers{one};
  RowSpace span(d);
  for (const auto& r : rad) span.add(r);
  span.add(one);
  for (;;) {
    RVector next = mul(powers.back(), a);
    if (span.contains(next)) {
      // express next = sum c_i a^i + radical part
      int cols = int(rad.size() + powers.size());
      RMatrix M(d, cols);
      for (int row = 0; row < d; ++row) {
        for (std::size_t r = 0; r < rad.size(); ++r) M(row, int(r)) = rad[r][row];
        for (std::size_t i = 0; i < powers.size(); ++i) M(row, int(rad.size() + i)) = powers[i][row];
      }
      auto sol = solve(M, next);
      std::vector<Rational> coeff(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) coeff[i] = -(*sol)[rad.size() + i];
      coeff.back() = 1;
      generates = int(powers.size()) == target;
      return QPoly(std::move(coeff));
    }
    span.add(next);
    powers.push_back(std::move(next));
  }
}

}  // namespace

CenterDecomposition center_oracle(const SparseAlgebra& A, int max_dim) {
  int m = A.dimension();
  if (m > max_dim) throw CapacityError("center oracle: algebra dimension exceeds limit");
  CenterDecomposition out;
  Integer pz = (Integer(1) << 61) - 1;
  std::vector<RVector> basis;
  for (int attempt = 0; attempt < 4 && basis.empty(); ++attempt) {
    auto cand = center_basis_mod(A, pz.get_ui());
    bool ok = !cand.empty();
    for (const auto& z : cand)
      if (ok && !A.commutes_with_basis(z)) ok = false;
    if (ok) basis = std::move(cand);
    Integer next = pz - 2;
    while (!mpz_probab_prime_p(next.get_mpz_t(), 30)) next -= 2;
    pz = next;
  }
  if (basis.empty()) throw InconsistencyError("center oracle: could not certify the center");
  out.center_basis = basis;

  CenterRing Z{&A, basis, {}};
  for (const auto& b : basis) {
    int p = 0;
    while (!sgn(b[p])) ++p;
    Z.pivots.push_back(p);
  }
  int d = Z.dim();
  std::vector<std::vector<RVector>> table(d, std::vector<RVector>(d));
  for (int s = 0; s < d; ++s)
    for (int t = s; t < d; ++t) {
      table[s][t] = Z.coords(A.multiply(basis[s], basis[t]));
      table[t][s] = table[s][t];
    }
  // trace form on Z; its radical is the nilradical in characteristic 0
  auto trace_of_mult = [&](const RVector& x) {
    Rational tr = 0;
    for (int t = 0; t < d; ++t)
      for (int s = 0; s < d; ++s)
        if (sgn(x[s])) tr += x[s] * table[s][t][t];
    return tr;
  };
  RMatrix B(d, d);
  for (int s = 0; s < d; ++s)
    for (int t = s; t < d; ++t) {
      B(s, t) = trace_of_mult(table[s][t]);
      B(t, s) = B(s, t);
    }
  std::vector<RVector> rad = nullspace(B);
  out.radical_dimension = int(rad.size());
  int target = d - int(rad.size());

  std::mt19937 rng(7);
  QPoly minpoly;
  RVector gen;
  bool generates = false;
  for (int tries = 0; tries < 200 && !generates; ++tries) {
    int range = 3 + tries;
    std::uniform_int_distribution<int> dist(-range, range);
    gen.assign(d, Rational(0));
    for (auto& x : gen) x = dist(rng);
    minpoly = minimal_poly_mod(Z, table, gen, rad, target, generates);
  }
  if (!generates) throw InconsistencyError("center oracle: no generating element found");
  auto factors = factor_over_q(minpoly);

  auto zmul = [&](const RVector& x, const RVector& y) {
    RVector c(d);
    for (int s = 0; s < d; ++s) {
      if (!sgn(x[s])) continue;
      for (int t = 0; t < d; ++t)
        if (sgn(y[t])) axpy(c, x[s] * y[t], table[s][t]);
    }
    return c;
  };
  RVector one = Z.coords(A.one());
  for (const auto& fi : factors) {
    QPoly rest = divmod(minpoly, fi).first;
    QPoly s, t;
    xgcd(rest, fi, s, t);
    QPoly u = divmod(s * rest, minpoly).second;
    // evaluate u(gen) by Horner
    RVector e(d);
    for (int k = u.degree(); k >= 0; --k) {
      e = zmul(e, gen);
      axpy(e, u.coeff(k), one);
    }
    for (int it = 0; it < 64; ++it) {
      RVector e2 = zmul(e, e);
      if (e2 == e) break;
      RVector e3 = zmul(e2, e);
      e = sub(scale(3, e2), scale(2, e3));
    }
    if (zmul(e, e) != e) throw InconsistencyError("center oracle: idempotent lifting did not converge");
    out.primitive_idempotents.push_back(Z.embed(e));
  }
  std::sort(out.primitive_idempotents.begin(), out.primitive_idempotents.end(),
            [](const RVector& a, const RVector& b) {
              for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] > b[i];
              return false;
            });
  return out;
}

SubsumSearch connectedness_search(const std::vector<RVector>& candidates, const CoefficientRing& ring,
                                  int max_candidates) {
  int k = int(candidates.size());
  if (k > max_candidates) throw CapacityError("connectedness search: too many candidates");
  SubsumSearch out;
  if (k == 0) {
    out.connected = true;
    out.integral_subsets.push_back({});
    return out;
  }
  int m = int(candidates[0].size());
  Integer D = 1;
  for (const auto& v : candidates)
    for (const auto& x : v) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.get_den().get_mpz_t());
  // the part of D that must divide a numerator for membership in the ring
  Integer Dpi = 1;
  if (ring.kind() == CoefficientRing::Kind::Integers) {
    Dpi = D;
  } else if (ring.kind() == CoefficientRing::Kind::Semilocal) {
    Integer rest = D;
    for (auto p : ring.primes())
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= p;
        Dpi *= p;
      }
  }
  std::vector<std::vector<int>> subsets;
  if (Dpi == 1) {
    for (long mask = 0; mask < (1L << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) s.push_back(i);
      subsets.push_back(std::move(s));
    }
  } else {
    if (!Dpi.fits_slong_p() || Dpi > Integer(1L << 62)) throw CapacityError("connectedness search: modulus too large");
    long mod = Dpi.get_si();
    std::vector<int> coords;
    std::vector<std::vector<long>> res(k);
    for (int c = 0; c < m; ++c) {
      bool all_zero = true;
      std::vector<long> col(k);
      for (int i = 0; i < k; ++i) {
        Integer s = candidates[i][c].get_num() * (D / candidates[i][c].get_den());
        Integer r = s % Dpi;
        if (r < 0) r += Dpi;
        col[i] = r.get_si();
        if (col[i]) all_zero = false;
      }
      if (all_zero) continue;
      coords.push_back(c);
      for (int i = 0; i < k; ++i) res[i].push_back(col[i]);
    }
    int w = int(coords.size());
    std::vector<long> sum(w, 0);
    int nonzero = 0;
    std::vector<bool> in(k, false);
    auto record = [&]() {
      if (nonzero) return;
      std::vector<int> s;
      for (int i = 0; i < k; ++i)
        if (in[i]) s.push_back(i);
      subsets.push_back(std::move(s));
    };
    record();
    for (long step = 1; step < (1L << k); ++step) {
      int i = __builtin_ctzl(step);  // Gray code: flip bit i
      bool add = !in[i];
      in[i] = add;
      for (int c = 0; c < w; ++c) {
        long before = sum[c];
        long v = res[i][c];
        if (!v) continue;
        long after = add ? before + v : before - v;
        if (after >= mod) after -= mod;
        if (after < 0) after += mod;
        sum[c] = after;
        nonzero += (after != 0) - (before != 0);
      }
      record();
    }
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.integral_subsets = std::move(subsets);
  out.connected = out.integral_subsets.size() == 2 && out.integral_subsets[0].empty() &&
                  int(out.integral_subsets[1].size()) == k;
  return out;
}

}  // namespace biset
