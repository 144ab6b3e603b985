#pragma once

#include <vector>

#include "biset/rational.hpp"

namespace biset {

// Dense univariate polynomial over Q, coefficients from low to high degree.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i < int(c_.size()) ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  QPoly monic() const;
  QPoly derivative() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder of a by b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);
// Returns monic g = s*a + t*b.
QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);

// Monic irreducible factors over Q of the square-free part of f, sorted by
// degree then coefficients.
std::vector<QPoly> factor_over_q(const QPoly& f);

}  // namespace biset
