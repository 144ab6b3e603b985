#pragma once

#include <string>
#include <vector>

#include "biset/characters.hpp"
#include "biset/subgroups.hpp"

namespace biset {

// Sweep of the positivity statements for irreducible characters chi of A and
// subgroups B, C of A (sums over the distinct elements of each product set):
//   chi((BC)^+) is a non-negative real number;
//   chi((aB)^+) != 0 implies chi(B^+) != 0;
//   chi((BaC)^+) != 0 implies chi((BC)^+) != 0.
// Rational orbit sums are checked exactly, complex irreducibles numerically.
struct PositivityReport {
  std::string group;
  long nonnegative_checks = 0;
  long coset_checks = 0;
  long double_coset_checks = 0;
  long failures = 0;
  std::vector<std::string> counterexamples;  // first few failures
  bool ok() const { return failures == 0; }
};

PositivityReport positivity_sweep(const SubgroupLattice& lat, double tol = 1e-9);

}  // namespace biset
