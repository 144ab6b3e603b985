#pragma once

#include <memory>
#include <vector>

#include "biset/linalg.hpp"
#include "biset/subgroups.hpp"

namespace biset {

// Coordinates over {[G/H] : H in the conjugacy-class representatives}.
struct BurnsideElement {
  RVector coords;
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) { return a.coords == b.coords; }
};

class BurnsideRing {
 public:
  explicit BurnsideRing(LatticePtr lat);

  const SubgroupLattice& lattice() const { return *lat_; }
  const LatticePtr& lattice_ptr() const { return lat_; }
  int rank() const { return lat_->num_conj_classes(); }

  // marks[h][k] = |(G/K)^H| over conjugacy classes h, k.
  const std::vector<std::vector<long>>& table_of_marks() const { return marks_; }

  BurnsideElement basis(int cls) const;
  BurnsideElement one() const { return basis(rank() - 1); }
  RVector marks(const BurnsideElement& a) const;
  BurnsideElement from_marks(const RVector& m) const;
  BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) const;
  // Orbit decomposition of G/H x G/K computed on the G-set itself.
  BurnsideElement multiply_bruteforce(int h, int k) const;

  // e_U: mark vector is the indicator of the class of U.
  BurnsideElement idempotent(int cls) const;
  // Conjugacy class of U^(pi) for each class.
  std::vector<int> residual_classes(const std::vector<unsigned long>& primes) const;
  // Sum of e_V over V with V^(pi) conjugate to U; U must be pi-perfect.
  BurnsideElement epsilon_pi(int cls, const std::vector<unsigned long>& primes) const;
  // Sum of epsilon_V over the classes V isomorphic to the pi-perfect iso-class representative W.
  BurnsideElement epsilon_hat_pi(int iso_cls, const std::vector<unsigned long>& primes) const;

 private:
  LatticePtr lat_;
  std::vector<std::vector<long>> marks_;
};

// End_{QG}(QX) connectedness over Z_pi for X given by point stabilizers.
struct HeckeResult {
  bool connected = false;
  bool in_hypothesis = true;
  int dimension = 0;
  int num_primitive_idempotents = 0;
};

class CoefficientRing;
HeckeResult hecke_connectedness(const GroupPtr& g, const std::vector<ElementSet>& stabilizers,
                                const CoefficientRing& ring);

}  // namespace biset
