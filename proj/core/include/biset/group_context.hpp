#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "biset/biset_algebra.hpp"
#include "biset/burnside.hpp"
#include "biset/characters.hpp"
#include "biset/homomorphisms.hpp"
#include "biset/subgroups.hpp"

namespace biset {

class GhostSpace;

// Lazily computed data attached to one group: lattice, Burnside ring,
// automorphism data and character tables of Out, double Burnside algebras.
class GroupContext : public std::enable_shared_from_this<GroupContext> {
 public:
  static std::shared_ptr<const GroupContext> create(GroupPtr g, int max_order = kDefaultMaxOrder,
                                                    std::optional<std::string> cache_dir = std::nullopt);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const SubgroupLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const BurnsideRing& burnside() const { return *burnside_; }

  const AutData& aut(int sub) const;
  const RationalCharacterTable& out_table(int sub) const;
  // Aut_G(V) inside Aut(V) and its image Out_G(V) inside Out(V).
  const ElementSet& aut_g(int sub) const;
  const ElementSet& out_g(int sub) const;
  // Fixed isomorphism from the isomorphism-class representative onto sub.
  const GroupMap& iso_from_rep(int sub) const;
  // Iso class of an arbitrary subgroup index.
  int iso_class_of(int sub) const { return lattice_->iso_class(lattice_->conj_class(sub)); }

  // Algebra with structure constants available (from the cache when configured).
  AlgebraPtr algebra(BisetTag tag) const;
  const GhostSpace& ghost() const;

 private:
  GroupContext() = default;

  GroupPtr group_;
  LatticePtr lattice_;
  std::unique_ptr<BurnsideRing> burnside_;
  std::optional<std::string> cache_dir_;

  mutable std::recursive_mutex mu_;
  mutable std::map<int, std::unique_ptr<AutData>> aut_;
  mutable std::map<int, std::unique_ptr<RationalCharacterTable>> out_tables_;
  mutable std::map<int, ElementSet> aut_g_;
  mutable std::map<int, ElementSet> out_g_;
  mutable std::map<int, GroupMap> iso_;
  mutable std::map<BisetTag, AlgebraPtr> algebras_;
  mutable std::shared_ptr<const GhostSpace> ghost_;
};

using ContextPtr = std::shared_ptr<const GroupContext>;

}  // namespace biset
