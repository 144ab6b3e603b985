#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "biset/biset_algebra.hpp"
#include "biset/group_context.hpp"
#include "biset/rational.hpp"

namespace biset {

// (U, chi): U an isomorphism-class representative, chi a rational irreducible
// (Galois orbit sum) of Out(U) occurring in Q Injbar(U, G).
struct EGPair {
  int iso_cls = -1;
  int u = -1;    // subgroup index
  int chi = -1;  // orbit index in the rational table of Out(U)
  std::string label;
  friend bool operator==(const EGPair& a, const EGPair& b) { return a.u == b.u && a.chi == b.chi; }
};

// Both membership routes are evaluated; a disagreement throws InconsistencyError.
std::vector<EGPair> compute_EG(const GroupContext& ctx);
// Multiplicity of chi in the permutation character of Out(U) on Injbar(U, G).
Rational injbar_multiplicity(const GroupContext& ctx, int iso_cls, int chi);
// (chi_V restricted to Out_G(V), 1) for the class representative V of block b.
Rational outg_multiplicity(const GroupContext& ctx, int iso_cls, int chi, int block);

// e_(U,chi), or e_(U,chi,V) when block >= 0; coordinates in the bifree algebra.
RVector bifree_idempotent(const GroupContext& ctx, const EGPair& p, int block = -1);

struct BlockChecks {
  bool idempotent = false;
  bool orthogonal = false;
  bool central = false;
  bool sum_to_one = false;
  bool integrality = false;
  bool primitive = false;
  bool hypothesis = true;
  bool all() const { return idempotent && orthogonal && central && sum_to_one && integrality && primitive; }
};

struct Block {
  std::string label;
  std::vector<int> pairs;  // indices into BlockPartition::pairs
  RVector idempotent;      // coordinates in BlockPartition::algebra
};

struct BlockPartition {
  AlgebraPtr algebra;
  CoefficientRing ring = CoefficientRing::rationals();
  std::vector<EGPair> pairs;
  std::vector<std::vector<int>> relation;  // adjacency, only filled for the left-free ring
  std::vector<Block> blocks;
  BlockChecks checks;
  // Left-free only: every central idempotent found by the center oracle lies in the bifree span.
  bool center_in_bifree = true;
  int center_primitives = -1;
};

// Idempotent, orthogonal, central, sum and integrality checks on the block idempotents.
BlockChecks verify_blocks(const BisetAlgebra& alg, const std::vector<Block>& blocks, const CoefficientRing& ring);

// Primes of |G| that are not units of the ring (all of them over Z).
std::vector<unsigned long> non_unit_primes(const GroupContext& ctx, const CoefficientRing& ring);
// Every prime of every |Out(U)| is a non-unit.
bool out_primes_non_units(const GroupContext& ctx, const CoefficientRing& ring);

BlockPartition bifree_blocks(const GroupContext& ctx, const CoefficientRing& ring);
BlockPartition leftfree_blocks(const GroupContext& ctx, const CoefficientRing& ring);

// Delta(eps_hat_W) minus the sum of e_(V,chi) over V with V^(pi) isomorphic to W;
// returns the iso classes W where the two differ.
std::vector<int> refinement_failures(const GroupContext& ctx, const std::vector<unsigned long>& primes);

// Minimal nonempty members of a family of index sets closed under union and complement.
std::vector<std::vector<int>> atoms(const std::vector<std::vector<int>>& subsets, int k);

// dim of e_p Lambda e_q for the left-free algebra Lambda, computed as trace(L_p R_q).
class DirectRelation {
 public:
  DirectRelation(const GroupContext& ctx, const std::vector<EGPair>& pairs);
  long dimension(int p, int q) const { return dims_[std::size_t(p) * n_ + q]; }
  bool related(int p, int q) const { return dimension(p, q) != 0; }
  // The left-free images of e_(U,chi).
  const std::vector<RVector>& idempotents() const { return idem_; }

 private:
  int n_;
  std::vector<long> dims_;
  std::vector<RVector> idem_;
};

bool relation_direct(const GroupContext& ctx, const EGPair& p, const EGPair& q);

// Stabilizer of an epimorphism alpha: V' -> V in Aut(V) x Aut(V') and its image in Out(V) x Out(V').
struct LAlphaData {
  int v = -1, vp = -1;
  GroupMap alpha;
  ElementSet aut_ker;                          // Aut(V', ker alpha) inside Aut(V')
  std::vector<Elem> alpha_star;                // on Aut(V', ker alpha), -1 elsewhere
  std::vector<std::pair<Elem, Elem>> l_alpha;  // (alpha_*(w'), w')
  std::vector<std::pair<Elem, Elem>> lbar;     // sorted, distinct
};

LAlphaData build_l_alpha(const GroupContext& ctx, int v, int vp, const GroupMap& alpha);
// Same subgroup by scanning all of Aut(V) x Aut(V').
std::vector<std::pair<Elem, Elem>> l_alpha_bruteforce(const GroupContext& ctx, int v, int vp, const GroupMap& alpha);

// Epimorphisms V' -> V, optionally one per orbit of Aut_G(V) x Aut_G(V').
std::vector<GroupMap> epimorphisms(const GroupContext& ctx, int vp, int v, bool reduce);

// (chi_V^* x chi'_V')([(Out_G(V) x Out_G(V')) Lbar_alpha]^+).
Rational criterion_value(const GroupContext& ctx, const std::vector<Rational>& chi_v,
                         const std::vector<Rational>& chi_vp, const LAlphaData& l);

// Rational table values of chi transported to Out(V) for a subgroup V isomorphic to U.
std::vector<Rational> chi_on(const GroupContext& ctx, int u, int chi, int v);

bool relation_character(const GroupContext& ctx, const EGPair& p, const EGPair& q, bool reduce = true);

struct OutGEquivalences {
  bool sum_over_lbar = false;   // the criterion value itself
  bool restriction = false;     // trivial character inside the restriction to Lbar
  bool deflate_induce = false;  // res, def, iso, ind starting from chi'
  bool inflate_induce = false;  // res, iso, inf, ind starting from chi
  bool agree() const {
    return sum_over_lbar == restriction && restriction == deflate_induce && deflate_induce == inflate_induce;
  }
};

// Requires trivial Out_G(V) and Out_G(V'); throws InconsistencyError when the four disagree.
// chi and chi_p are rational class functions on Out(V) and Out(V'), indexed by element.
OutGEquivalences trivial_outg_equivalences(const GroupContext& ctx, const LAlphaData& l,
                                           const std::vector<Rational>& chi, const std::vector<Rational>& chi_p);
// (chi', ind inf_{alpha_*} res chi) on Out(V').
Rational inflate_induce(const GroupContext& ctx, const LAlphaData& l, const std::vector<Rational>& chi,
                        const std::vector<Rational>& chi_p);

struct ElementaryAbelianReport {
  int p = 0, n = 0;
  std::vector<EGPair> pairs;
  std::vector<std::vector<char>> relation;  // generic criterion
  std::vector<std::vector<char>> parabolic; // inflate-induce formula
  std::vector<int> unipotent;               // pair indices
  std::vector<std::vector<int>> classes;    // closure classes
  bool agree = false;
  bool unipotent_is_class = false;
};

ElementaryAbelianReport elementary_abelian_report(int p, int n);

}  // namespace biset
