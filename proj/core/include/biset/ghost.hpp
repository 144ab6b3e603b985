#pragma once

#include <array>
#include <vector>

#include "biset/biset_algebra.hpp"
#include "biset/group_context.hpp"
#include "biset/linalg.hpp"

namespace biset {

// G-orbits of injections U -> G for an isomorphism-class representative U,
// grouped into blocks by the conjugacy class of the image.
struct InjOrbitBasis {
  int iso_cls = -1;
  int u = -1;                    // subgroup index of U
  std::vector<int> blocks;       // class representative V per block
  std::vector<int> block_start;  // orbits of block b are [block_start[b], block_start[b+1])
  std::vector<int> block_of;
  std::vector<GroupMap> reps;                // lambda per orbit
  std::vector<std::vector<int>> action;      // action[o][a] = orbit of lambda_o after a, a in Aut(U)
  std::vector<GroupMap> lambda0;             // fixed isomorphism U -> V per block
  std::vector<std::vector<Elem>> lambda0_inv;
  std::vector<std::vector<int>> coset_of;    // [block][a] = orbit of lambda0 after a

  int size() const { return static_cast<int>(reps.size()); }
  int block_size(int b) const { return block_start[b + 1] - block_start[b]; }
};

InjOrbitBasis build_inj_orbits(const GroupContext& ctx, int iso_cls);

// One dense matrix per isomorphism class U; entry (l, m) is the coefficient
// of [lambda_l] in the image of [lambda_m].
struct GhostElement {
  std::vector<RMatrix> parts;
  friend bool operator==(const GhostElement& a, const GhostElement& b) { return a.parts == b.parts; }
};

GhostElement operator*(const GhostElement& a, const GhostElement& b);
GhostElement operator+(const GhostElement& a, const GhostElement& b);

class GhostSpace {
 public:
  explicit GhostSpace(const GroupContext& ctx);

  const GroupContext& context() const { return ctx_; }
  const BisetAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  int num_components() const { return static_cast<int>(bases_.size()); }
  const InjOrbitBasis& basis(int c) const { return bases_[c]; }
  // Orbit index of an injection from the representative of component c.
  int orbit_of(int c, const GroupMap& lambda) const;
  // Bifree class of Delta(lambda_l(U), lambda_l lambda_m^-1, lambda_m(U)).
  int entry_class(int c, int l, int m) const { return entry_class_[c][std::size_t(l) * bases_[c].size() + m]; }

  GhostElement zero() const;
  GhostElement identity() const;
  bool is_equivariant(const GhostElement& x) const;

  GhostElement sigma(const RVector& a) const;
  // Exact preimage; throws InconsistencyError when x is not in the image.
  RVector sigma_inverse(const GhostElement& x) const;

  // Multiplication by e_chi on Q Injbar(U,G), optionally restricted to the block of V.
  GhostElement echi(int c, int orbit, int block = -1) const;

  // rho after sigma^-1, in orbit-sum coordinates over the bifree classes.
  RVector rho(const GhostElement& x) const;
  RVector rho_formula(int c, int orbit, int block) const;

 private:
  const GroupContext& ctx_;
  AlgebraPtr alg_;
  std::vector<InjOrbitBasis> bases_;
  std::vector<std::vector<int>> entry_class_;
  std::vector<std::vector<long>> divisor_;
  std::vector<std::array<int, 3>> first_entry_;  // per bifree class
};

// Product of G x G orbit sums of triples (U, alpha, V), indexed by the classes
// of a left-free or bifree algebra (a triple is the graph of alpha).
RVector triple_multiply(const BisetAlgebra& alg, const RVector& x, const RVector& y);

}  // namespace biset
