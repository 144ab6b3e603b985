#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "biset/finite_group.hpp"

namespace biset {

// Homomorphism from a subgroup of one ambient group into another ambient group.
struct GroupMap {
  GroupPtr from;
  GroupPtr to;
  ElementSet domain;
  std::vector<Elem> image;  // indexed by elements of *from, -1 outside the domain

  Elem operator()(Elem x) const { return image[x]; }
  ElementSet image_set() const;
  ElementSet kernel() const;
  bool is_injective() const;
};

// f after g.
GroupMap compose(const GroupMap& f, const GroupMap& g);
// Inverse of an injective map, defined on its image.
GroupMap inverse(const GroupMap& iso);
// Restriction of conjugation by x to the subgroup dom.
GroupMap conjugation_map(const GroupPtr& g, Elem x, const ElementSet& dom);
GroupMap identity_map(const GroupPtr& g, const ElementSet& dom);

enum class MapKind { Any, Injective, Surjective, Bijective };

// All homomorphisms dom -> cod of the requested kind; surjective means onto cod.
std::vector<GroupMap> enumerate_maps(const GroupPtr& from, const ElementSet& dom, const GroupPtr& to,
                                     const ElementSet& cod, MapKind kind);
// Visits maps until the callback returns false.
void for_each_map(const GroupPtr& from, const ElementSet& dom, const GroupPtr& to, const ElementSet& cod,
                  MapKind kind, const std::function<bool(const GroupMap&)>& visit);
std::optional<GroupMap> find_isomorphism(const GroupPtr& ga, const ElementSet& a, const GroupPtr& gb,
                                         const ElementSet& b);

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ std::size_t(x + 1)) * 1099511628211ull;
    return h;
  }
};

// Aut(U), Inn(U) and Out(U) = Aut(U)/Inn(U) for a subgroup U of an ambient group.
class AutData {
 public:
  AutData(GroupPtr ambient, ElementSet subgroup);

  const FiniteGroup& ambient() const { return *ambient_; }
  const GroupPtr& ambient_ptr() const { return ambient_; }
  const ElementSet& subgroup() const { return subgroup_; }
  const std::vector<Elem>& generators() const { return gens_; }

  const GroupPtr& aut() const { return aut_; }
  const GroupPtr& out() const { return out_; }
  const GroupMap& map(Elem a) const { return maps_[a]; }
  const ElementSet& inner() const { return inn_; }
  Elem to_out(Elem a) const { return to_out_[a]; }
  Elem out_rep(Elem o) const { return out_rep_[o]; }

  // Index of an automorphism of U (given as a map with domain U); -1 when not bijective onto U.
  Elem index_of(const GroupMap& m) const;
  Elem index_of_images(const std::vector<Elem>& generator_images) const;
  // Conjugation by x restricted to U, for x normalizing U.
  Elem conjugation(Elem x) const;
  // Aut_G(U) from N_G(U).
  ElementSet aut_from(const ElementSet& normalizing) const;
  ElementSet project(const ElementSet& auts) const;

 private:
  GroupPtr ambient_;
  ElementSet subgroup_;
  std::vector<Elem> gens_;
  std::vector<GroupMap> maps_;
  std::unordered_map<std::vector<int>, int, VectorHash> lookup_;
  GroupPtr aut_;
  ElementSet inn_;
  GroupPtr out_;
  std::vector<Elem> to_out_;
  std::vector<Elem> out_rep_;
};

}  // namespace biset
