#pragma once

#include <complex>
#include <vector>

#include "biset/rational.hpp"

namespace biset {

// Element of Q(zeta_e) in the power basis 1, z, ..., z^(phi(e)-1).
class Cyclotomic {
 public:
  Cyclotomic() : e_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& r) : e_(1), c_{r} {}  // NOLINT: implicit by design
  Cyclotomic(long r) : Cyclotomic(Rational(r)) {}   // NOLINT

  static Cyclotomic zeta(int e, long k = 1);
  // sum_j c[j] zeta_e^j for j < e.
  static Cyclotomic from_exponents(int e, const std::vector<Rational>& c);
  static Cyclotomic from_basis(int e, std::vector<Rational> c);

  int conductor() const { return e_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational() const;  // throws when irrational
  Cyclotomic lift(int e) const;
  // zeta -> zeta^k, gcd(k, e) = 1.
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }
  std::complex<double> to_complex() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

 private:
  int e_;
  std::vector<Rational> c_;
};

int euler_phi(int n);
// Coefficients of the e-th cyclotomic polynomial, low to high.
const std::vector<long>& cyclotomic_polynomial(int e);

}  // namespace biset
