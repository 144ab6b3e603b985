#include "biset/polynomial.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace biset {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }

QPoly QPoly::x() { return QPoly({Rational(0), Rational(1)}); }

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly out = *this;
  Rational inv = 1 / lead();
  for (auto& x : out.c_) x *= inv;
  return out;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * i);
  return QPoly(std::move(d));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  Rational inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    Rational f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    QPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.lead();
  s = s0 * QPoly::constant(inv);
  t = t0 * QPoly::constant(inv);
  return r0.monic();
}

namespace {

using ZPoly = std::vector<Integer>;  // low to high

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly primitive_integer(const QPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  for (const auto& c : f.coeffs()) z.push_back(Integer(c * l));
  Integer g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : z) c /= g;
  if (z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

// Arithmetic in F_P[x].
struct ModRing {
  Integer p;

  void norm(ZPoly& a) const {
    for (auto& c : a) {
      c %= p;
      if (c < 0) c += p;
    }
    trim(a);
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
    norm(c);
    return c;
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    norm(c);
    return c;
  }
  Integer inv(const Integer& a) const {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
      throw std::domain_error("non-invertible modular element");
    return r;
  }
  std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b) const {
    int db = deg(b);
    if (deg(a) < db) return {{}, a};
    ZPoly q(deg(a) - db + 1);
    Integer li = inv(b.back());
    for (int i = deg(a); i >= db; --i) {
      if (a[i] == 0) continue;
      Integer f = (a[i] * li) % p;
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] - f * b[j]) % p;
    }
    a.resize(db);
    norm(a);
    norm(q);
    return {q, a};
  }
  ZPoly mod(const ZPoly& a, const ZPoly& b) const { return divmod(a, b).second; }
  ZPoly monic(ZPoly a) const {
    if (a.empty()) return a;
    Integer li = inv(a.back());
    for (auto& c : a) c = (c * li) % p;
    return a;
  }
  ZPoly gcd(ZPoly a, ZPoly b) const {
    while (!b.empty()) {
      ZPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ZPoly powmod(ZPoly base, Integer e, const ZPoly& m) const {
    ZPoly result{Integer(1)};
    base = mod(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = mod(mul(result, base), m);
      base = mod(mul(base, base), m);
      e >>= 1;
    }
    return result;
  }
};

std::vector<ZPoly> equal_degree(const ModRing& R, const ZPoly& g, int d, gmp_randclass& rng) {
  if (deg(g) == d) return {g};
  Integer e;
  mpz_pow_ui(e.get_mpz_t(), R.p.get_mpz_t(), d);
  e = (e - 1) / 2;
  for (;;) {
    ZPoly a(deg(g));
    for (auto& c : a) c = rng.get_z_range(R.p);
    trim(a);
    if (deg(a) < 1) continue;
    ZPoly b = R.powmod(a, e, g);
    b = R.sub(b, ZPoly{Integer(1)});
    ZPoly c = R.gcd(g, b);
    if (deg(c) > 0 && deg(c) < deg(g)) {
      auto left = equal_degree(R, c, d, rng);
      auto right = equal_degree(R, R.monic(R.divmod(g, c).first), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<ZPoly> factor_mod(const ModRing& R, ZPoly f, gmp_randclass& rng) {
  f = R.monic(f);
  std::vector<ZPoly> out;
  ZPoly h{Integer(0), Integer(1)};
  const ZPoly x{Integer(0), Integer(1)};
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = R.powmod(h, R.p, f);
    ZPoly g = R.gcd(f, R.sub(h, x));
    if (deg(g) > 0) {
      for (auto& piece : equal_degree(R, g, i, rng)) out.push_back(R.monic(piece));
      f = R.monic(R.divmod(f, g).first);
      h = R.mod(h, f);
    }
  }
  if (deg(f) > 0) out.push_back(f);
  return out;
}

// Exact division over Z; returns false when b does not divide a.
bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  int db = deg(b);
  if (deg(a) < db) return false;
  q.assign(deg(a) - db + 1, Integer(0));
  for (int i = deg(a); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer f = r[i] / b.back();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  return true;
}

QPoly to_monic_q(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& x : z) c.emplace_back(x);
  return QPoly(std::move(c)).monic();
}

std::vector<QPoly> factor_squarefree(const QPoly& fq) {
  if (fq.degree() <= 1) return {fq.monic()};
  ZPoly f = primitive_integer(fq);
  int n = deg(f);
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  bound <<= n;
  bound *= abs(f.back());
  Integer start = 2 * bound * abs(f.back()) + 1;

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240521);
  ZPoly df;
  for (int i = 1; i <= n; ++i) df.push_back(f[i] * i);

  std::vector<ZPoly> best;
  Integer best_p = 0;
  Integer cand = start;
  for (int tries = 0, found = 0; tries < 40 && found < 4; ++tries) {
    mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    ModRing R{cand};
    ZPoly fm = f, dm = df;
    R.norm(fm);
    R.norm(dm);
    if (deg(fm) != n || deg(R.gcd(fm, dm)) != 0) continue;
    auto facs = factor_mod(R, fm, rng);
    ++found;
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = cand;
    }
    if (best.size() == 1) break;
  }
  if (best.empty()) throw std::runtime_error("no suitable prime for factorization");
  if (best.size() == 1) return {fq.monic()};

  ModRing R{best_p};
  Integer half = best_p / 2;
  std::vector<QPoly> result;
  ZPoly rem = f;
  std::vector<ZPoly> mods = std::move(best);
  std::size_t s = 1;
  while (2 * s <= mods.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly g{rem.back()};
      for (auto i : idx) g = R.mul(g, mods[i]);
      for (auto& c : g)
        if (c > half) c -= best_p;
      Integer content = 0;
      for (const auto& c : g) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      for (auto& c : g) c /= content;
      ZPoly q;
      if (exact_divide(rem, g, q)) {
        result.push_back(to_monic_q(g));
        rem = q;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) mods.erase(mods.begin() + long(*it));
        found = true;
        break;
      }
      // next combination
      int k = int(s) - 1;
      while (k >= 0 && idx[k] == mods.size() - s + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (std::size_t j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (deg(rem) > 0) result.push_back(to_monic_q(rem));
  return result;
}

}  // namespace

std::vector<QPoly> factor_over_q(const QPoly& f) {
  if (f.degree() < 1) return {};
  QPoly sq = divmod(f, gcd(f, f.derivative())).first.monic();
  auto out = factor_squarefree(sq);
  std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  return out;
}

}  // namespace biset
