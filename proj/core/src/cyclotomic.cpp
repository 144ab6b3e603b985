#include "biset/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace biset {

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<long>& cyclotomic_polynomial(int e) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::vector<long>> divisors;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) divisors.push_back(cyclotomic_polynomial(d));
  // x^e - 1 divided by Phi_d for every proper divisor d
  std::vector<long> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (const auto& div : divisors) {
    int dn = int(num.size()) - 1, dd = int(div.size()) - 1;
    std::vector<long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long f = num[i];
      q[i - dd] = f;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= f * div[j];
    }
    num = q;
  }
  std::lock_guard lock(mu);
  return cache.emplace(e, std::move(num)).first->second;
}

namespace {

const std::vector<long>& phi_poly(int e) { return cyclotomic_polynomial(e); }

// Reduce exponent coefficients (length >= phi(e)) modulo Phi_e.
std::vector<Rational> reduce(int e, std::vector<Rational> c) {
  const auto& f = phi_poly(e);
  int deg = int(f.size()) - 1;
  for (int i = int(c.size()) - 1; i >= deg; --i) {
    if (sgn(c[i]) == 0) continue;
    Rational k = c[i];
    for (int j = 0; j <= deg; ++j)
      if (f[j] != 0) c[i - deg + j] -= k * f[j];
  }
  c.resize(deg);
  return c;
}

}  // namespace

Cyclotomic Cyclotomic::from_exponents(int e, const std::vector<Rational>& c) {
  Cyclotomic z;
  z.e_ = e;
  std::vector<Rational> full(std::max<std::size_t>(c.size(), 1));
  for (std::size_t j = 0; j < c.size(); ++j) full[j % e] += c[j];
  z.c_ = reduce(e, std::move(full));
  z.c_.resize(euler_phi(e));
  return z;
}

Cyclotomic Cyclotomic::from_basis(int e, std::vector<Rational> c) {
  if (int(c.size()) != euler_phi(e)) throw std::invalid_argument("basis length mismatch");
  Cyclotomic z;
  z.e_ = e;
  z.c_ = std::move(c);
  return z;
}

Cyclotomic Cyclotomic::zeta(int e, long k) {
  std::vector<Rational> c(e);
  k %= e;
  if (k < 0) k += e;
  c[k] = 1;
  return from_exponents(e, c);
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::lift(int e) const {
  if (e == e_) return *this;
  if (e % e_) throw std::invalid_argument("lift target is not a multiple of the conductor");
  int step = e / e_;
  std::vector<Rational> full(e);
  for (std::size_t j = 0; j < c_.size(); ++j) full[j * step] = c_[j];
  return from_exponents(e, full);
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (std::gcd(k < 0 ? -k : k, long(e_)) != 1 && e_ > 1) throw std::invalid_argument("not a Galois exponent");
  std::vector<Rational> full(e_);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    long t = (long(j) * k) % e_;
    if (t < 0) t += e_;
    full[t] += c_[j];
  }
  return from_exponents(e_, full);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> s = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    double ang = 2 * std::numbers::pi * double(j) / e_;
    s += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

namespace {

int common(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  int e = common(a.e_, b.e_);
  Cyclotomic x = a.lift(e), y = b.lift(e);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic x = a;
  for (auto& v : x.c_) v = -v;
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.e_ == 1) {
    Cyclotomic x = b;
    for (auto& v : x.c_) v *= a.c_[0];
    return x;
  }
  if (b.e_ == 1) return b * a;
  int e = common(a.e_, b.e_);
  Cyclotomic x = a.lift(e), y = b.lift(e);
  std::vector<Rational> full(e);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (sgn(x.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j)
      if (sgn(y.c_[j]) != 0) full[(i + j) % e] += x.c_[i] * y.c_[j];
  }
  return Cyclotomic::from_exponents(e, full);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  int e = common(a.e_, b.e_);
  return a.lift(e).c_ == b.lift(e).c_;
}

}  // namespace biset
