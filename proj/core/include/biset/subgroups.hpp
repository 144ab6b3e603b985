#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "biset/finite_group.hpp"

namespace biset {

inline constexpr int kDefaultMaxOrder = 60;

// All subgroups of a finite group, sorted by (order, member list), with
// conjugacy and isomorphism classes. Class representatives are the first
// member of each class in this order.
class SubgroupLattice {
 public:
  static std::shared_ptr<const SubgroupLattice> build(GroupPtr g, int max_order = kDefaultMaxOrder);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  int size() const { return static_cast<int>(subgroups_.size()); }
  const ElementSet& subgroup(int i) const { return subgroups_[i]; }
  int order(int i) const { return orders_[i]; }
  const std::vector<Elem>& generators(int i) const { return gens_[i]; }
  int index_of(const ElementSet& s) const;
  int trivial() const { return 0; }
  int whole() const { return size() - 1; }

  int conj_class(int i) const { return conj_class_[i]; }
  int num_conj_classes() const { return static_cast<int>(class_members_.size()); }
  int class_rep(int c) const { return class_members_[c].front(); }
  const std::vector<int>& class_members(int c) const { return class_members_[c]; }
  // Some g with g U g^-1 = member, where U is the class representative.
  Elem transporter(int member) const { return transporter_[member]; }

  int iso_class(int conj_cls) const { return iso_class_[conj_cls]; }
  int num_iso_classes() const { return static_cast<int>(iso_members_.size()); }
  // Conjugacy classes in an isomorphism class; the first is the representative.
  const std::vector<int>& iso_members(int k) const { return iso_members_[k]; }
  int iso_rep(int k) const { return class_rep(iso_members_[k].front()); }

  int normalizer(int i) const { return normalizer_[i]; }
  int centralizer(int i) const { return centralizer_[i]; }
  bool is_normal(int i) const { return normalizer_[i] == whole(); }

  // Subgroup indices of conjugacy-class representatives and isomorphism-class representatives.
  std::vector<int> conj_class_reps() const;
  std::vector<int> iso_class_reps() const;
  std::vector<int> subgroups_of(int i) const;

 private:
  GroupPtr group_;
  std::vector<ElementSet> subgroups_;
  std::vector<int> orders_;
  std::vector<std::vector<Elem>> gens_;
  std::unordered_map<ElementSet, int, ElementSetHash> index_;
  std::vector<int> conj_class_;
  std::vector<std::vector<int>> class_members_;
  std::vector<Elem> transporter_;
  std::vector<int> iso_class_;
  std::vector<std::vector<int>> iso_members_;
  std::vector<int> normalizer_;
  std::vector<int> centralizer_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

// Smallest normal subgroup N of U with U/N a solvable pi-group.
int pi_residual(const SubgroupLattice& lat, int u, const std::vector<unsigned long>& primes);
bool is_pi_perfect(const SubgroupLattice& lat, int u, const std::vector<unsigned long>& primes);
bool is_solvable(const FiniteGroup& g);
// Commutator subgroup of a subgroup.
ElementSet derived_subgroup(const FiniteGroup& g, const ElementSet& h);

}  // namespace biset
