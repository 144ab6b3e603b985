#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "biset/biset_algebra.hpp"
#include "biset/center.hpp"
#include "biset/group_context.hpp"
#include "biset/linalg.hpp"

namespace biset {

// Fusion system F_S(G) of a p-subgroup S of G. S is rebuilt as a standalone
// group on its sorted members, so all maps live inside S.
class FusionSystem {
 public:
  static FusionSystem from_overgroup(GroupPtr g, const ElementSet& s, int max_order = kDefaultMaxOrder);
  // S = the first Sylow p-subgroup in lattice order.
  static FusionSystem sylow(GroupPtr g, unsigned long p, int max_order = kDefaultMaxOrder);

  const FiniteGroup& overgroup() const { return *g_; }
  unsigned long prime() const { return p_; }
  const ContextPtr& context() const { return ctx_; }
  const FiniteGroup& s() const { return ctx_->group(); }
  // Element of S (standalone index) as an element of G.
  Elem to_overgroup(Elem x) const { return to_g_[x]; }

  // phi given on a subgroup P of S with values in S.
  bool contains(const GroupMap& phi) const;
  // Aut_F(P) inside Aut(P) for a lattice index P of S.
  ElementSet aut_f(int p) const;
  // Injective morphisms P -> S, one per element of Hom_F(P, S).
  std::vector<GroupMap> homs_to_s(int p) const;
  bool is_inner() const;

  // F-isomorphism classes of subgroups of S; representative = smallest lattice index.
  const std::vector<std::vector<int>>& iso_classes() const { return iso_classes_; }
  int iso_class_of(int p) const { return iso_class_of_[p]; }

 private:
  GroupPtr g_;
  unsigned long p_ = 0;
  std::vector<Elem> to_g_;
  ContextPtr ctx_;
  // (P, images of the generators of P) for every morphism c_g: P -> S.
  std::unordered_set<std::vector<int>, VectorHash> maps_;
  std::vector<std::vector<int>> iso_classes_;
  std::vector<int> iso_class_of_;
};

// Span of the bifree classes [S x S / Delta(P, phi, Q)] with phi in F.
struct FusionAlgebra {
  AlgebraPtr bifree;            // bifree algebra of S
  std::vector<int> classes;     // bifree class index per basis element
  SparseAlgebra structure;      // closure under multiplication asserted
  int dimension() const { return int(classes.size()); }
  RVector lift(const RVector& a) const;  // to bifree coordinates
};

FusionAlgebra fusion_algebra(const FusionSystem& fs);

enum class FusionNormalization {
  PerRow,  // divide row phi by |C_S(phi(P))|
  Fixed,   // divide every entry by |C_S(P)|
};

// Equivariant matrices on the S-orbits of Hom_F(P, S), one per F-isomorphism class of P.
class FusionGhost {
 public:
  FusionGhost(const FusionSystem& fs, const FusionAlgebra& fa);

  int num_components() const { return int(orbits_.size()); }
  int component_size(int c) const { return int(orbits_[c].size()); }
  // sigma of an element in fusion-basis coordinates.
  std::vector<RMatrix> sigma(const RVector& a, FusionNormalization norm = FusionNormalization::PerRow) const;
  // Right action of Aut_F(P) on the orbit basis commutes with every sigma(a).
  bool is_equivariant(const std::vector<RMatrix>& x) const;
  // Rank of sigma on the fusion basis.
  int rank(FusionNormalization norm = FusionNormalization::PerRow) const;
  // sigma(b_i b_j) = sigma(b_i) sigma(b_j) on all basis pairs.
  bool is_multiplicative(FusionNormalization norm = FusionNormalization::PerRow) const;

 private:
  const FusionSystem& fs_;
  const FusionAlgebra& fa_;
  std::vector<int> reps_;                           // subgroup P per component
  std::vector<std::vector<GroupMap>> orbits_;       // representative morphism per S-orbit
  std::vector<std::vector<std::vector<int>>> act_;  // act_[c][o][w] = orbit of psi_o after w, w in Aut_F(P)
  std::vector<std::vector<int>> entry_class_;       // bifree class of Delta(phi(P), phi psi^-1, psi(P))
  std::vector<std::vector<long>> centralizer_;      // |C_S(psi_o(P))| per orbit
};

// Indices [Aut_F(P) : Aut_F(P) meet Aut_S(Q)^phi] over all F-isomorphisms phi: P -> Q.
std::vector<long> fusion_indices(const FusionSystem& fs, int p);
// Prime condition of the connectedness theorem, checked on F-class representatives.
bool fusion_hypothesis(const FusionSystem& fs, const CoefficientRing& ring);
// Same indices (as a sorted list) for every member of each F-isomorphism class.
bool fusion_indices_invariant(const FusionSystem& fs);

struct FusionCenterReport {
  bool connected = false;
  bool hypothesis = false;
  int dimension = 0;
  int center_dimension = 0;
  std::vector<RVector> primitive_idempotents;  // over Q, fusion-basis coordinates
  std::vector<std::vector<int>> integral_subsets;
};

FusionCenterReport fusion_center_connected(const FusionSystem& fs, const FusionAlgebra& fa,
                                           const CoefficientRing& ring);

}  // namespace biset
