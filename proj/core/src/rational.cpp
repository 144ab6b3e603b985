#include "biset/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace biset {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("bad rational: " + std::string(text));
  }
  q.canonicalize();
  return q;
}

CoefficientRing CoefficientRing::rationals() { return {}; }

CoefficientRing CoefficientRing::integers() {
  CoefficientRing r;
  r.kind_ = Kind::Integers;
  return r;
}

CoefficientRing CoefficientRing::semilocal(std::vector<unsigned long> primes) {
  CoefficientRing r;
  r.kind_ = Kind::Semilocal;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  r.primes_ = std::move(primes);
  return r;
}

bool CoefficientRing::contains(const Rational& q) const {
  switch (kind_) {
    case Kind::Rationals:
      return true;
    case Kind::Integers:
      return q.get_den() == 1;
    case Kind::Semilocal:
      for (unsigned long p : primes_) {
        if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), p)) return false;
      }
      return true;
  }
  return false;
}

bool CoefficientRing::is_non_unit(unsigned long p) const {
  switch (kind_) {
    case Kind::Rationals:
      return false;
    case Kind::Integers:
      return true;
    case Kind::Semilocal:
      return std::binary_search(primes_.begin(), primes_.end(), p);
  }
  return false;
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::Integers:
      return "Z";
    case Kind::Semilocal: {
      std::string s = "Z_{";
      for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(primes_[i]);
      }
      return s + "}";
    }
  }
  return "?";
}

std::vector<unsigned long> prime_divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace biset
