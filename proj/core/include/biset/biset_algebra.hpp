#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "biset/burnside.hpp"
#include "biset/center.hpp"
#include "biset/homomorphisms.hpp"
#include "biset/subgroups.hpp"

namespace biset {

enum class BisetTag { Bifree, LeftFree, Full };
std::string to_string(BisetTag tag);

// Subgroup of G x G as sorted codes a*|G| + b for (a, b).
using PairSet = std::vector<std::uint32_t>;

struct PairSetHash {
  std::size_t operator()(const PairSet& s) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : s) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

// (P1, K1, eta, P2, K2); eta sends an element b of P2 to the smallest element
// of the coset of K1 it corresponds to.
struct GoursatQuintuple {
  int p1, k1, p2, k2;  // lattice indices
  std::vector<Elem> eta;
};

GoursatQuintuple quintuple_of(const SubgroupLattice& lat, const PairSet& l);
PairSet subgroup_of(const SubgroupLattice& lat, const GoursatQuintuple& q);

struct BisetClass {
  PairSet rep;
  GoursatQuintuple quintuple;
  bool left_free = false;
  bool bifree = false;
  int order = 0;
  int class_size = 0;
};

// L * M = {(a, c) : (a, b) in L and (b, c) in M for some b}.
PairSet compose_pairs(int n, const PairSet& l, const PairSet& m);
// Projections of L onto the two factors.
ElementSet first_projection(int n, const PairSet& l);
ElementSet second_projection(int n, const PairSet& l);

// Twisted diagonal {(f(v), v) : v in V} for a map f defined on V.
PairSet twisted_diagonal(const FiniteGroup& g, const GroupMap& f);

// Z-span of [G x G / L] over classes of the tagged kind, with exact structure constants.
class BisetAlgebra {
 public:
  static std::shared_ptr<const BisetAlgebra> build(LatticePtr lat, BisetTag tag);

  BisetTag tag() const { return tag_; }
  const SubgroupLattice& lattice() const { return *lat_; }
  const LatticePtr& lattice_ptr() const { return lat_; }
  const FiniteGroup& group() const { return lat_->group(); }
  int dimension() const { return static_cast<int>(classes_.size()); }
  const BisetClass& basis_class(int i) const { return classes_[i]; }
  const std::vector<PairSet>& conjugates(int i) const { return conjugates_[i]; }
  int find(const PairSet& s) const;
  int identity() const { return identity_; }
  int dual(int i) const;
  std::string descriptor(int i) const;

  std::vector<Term> multiply_star(int i, int j) const;
  std::vector<Term> multiply_bruteforce(int i, int j) const;

  // Structure constants, computed on first use or installed from a cache.
  const SparseAlgebra& structure() const;
  bool has_structure() const;
  void install_structure(SparseAlgebra s) const;

  // mark(k, j) = Phi_{L_k}([G x G / L_j]).
  long mark(int k, int j) const;
  RVector marks_of(const RVector& a) const;
  RVector delta(const BurnsideElement& a, const BurnsideRing& b) const;
  RVector one() const;
  RVector multiply(const RVector& a, const RVector& b) const { return structure().multiply(a, b); }
  bool is_central(const RVector& x) const { return structure().commutes_with_basis(x); }

 private:
  void add_class(PairSet rep);
  void compute_marks() const;

  LatticePtr lat_;
  BisetTag tag_ = BisetTag::LeftFree;
  std::vector<BisetClass> classes_;
  std::vector<std::vector<PairSet>> conjugates_;
  std::unordered_map<PairSet, int, PairSetHash> lookup_;
  int identity_ = -1;

  mutable std::mutex mu_;
  mutable std::shared_ptr<const SparseAlgebra> structure_;
  mutable std::once_flag marks_once_;
  mutable std::vector<long> marks_;
};

using AlgebraPtr = std::shared_ptr<const BisetAlgebra>;

struct DoubleBurnsideElement {
  AlgebraPtr algebra;
  RVector coords;

  static DoubleBurnsideElement zero(const AlgebraPtr& a) { return {a, RVector(a->dimension())}; }
  static DoubleBurnsideElement basis(const AlgebraPtr& a, int i);
  bool is_zero() const { return biset::is_zero(coords); }
};

DoubleBurnsideElement operator*(const DoubleBurnsideElement& a, const DoubleBurnsideElement& b);
DoubleBurnsideElement operator+(const DoubleBurnsideElement& a, const DoubleBurnsideElement& b);
DoubleBurnsideElement operator-(const DoubleBurnsideElement& a, const DoubleBurnsideElement& b);
bool operator==(const DoubleBurnsideElement& a, const DoubleBurnsideElement& b);
// Re-express an element in an algebra whose classes contain its support.
DoubleBurnsideElement embed(const DoubleBurnsideElement& a, const AlgebraPtr& target);
RVector embed(const BisetAlgebra& from, const RVector& a, const BisetAlgebra& to);

}  // namespace biset
