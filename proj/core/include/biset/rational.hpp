#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace biset {

using Rational = mpq_class;
using Integer = mpz_class;

// Serialized as "num/den" with den > 0.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// Coefficient ring R: Q, Z, or the semilocal ring Z_pi of fractions whose
// denominators avoid every prime in pi.
class CoefficientRing {
 public:
  enum class Kind { Rationals, Integers, Semilocal };

  static CoefficientRing rationals();
  static CoefficientRing integers();
  static CoefficientRing semilocal(std::vector<unsigned long> primes);

  Kind kind() const { return kind_; }
  const std::vector<unsigned long>& primes() const { return primes_; }

  bool contains(const Rational& q) const;
  // True when p must be inverted-free, i.e. p is not a unit of R.
  bool is_non_unit(unsigned long p) const;
  std::string name() const;

 private:
  Kind kind_ = Kind::Rationals;
  std::vector<unsigned long> primes_;
};

std::vector<unsigned long> prime_divisors(unsigned long n);

}  // namespace biset
