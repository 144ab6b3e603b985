#pragma once

#include <memory>
#include <vector>

#include "biset/cyclotomic.hpp"
#include "biset/finite_group.hpp"
#include "biset/homomorphisms.hpp"

namespace biset {

// Class function on a whole group, one value per conjugacy class.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr g, std::vector<Cyclotomic> values);
  static ClassFunction trivial(GroupPtr g);
  static ClassFunction regular(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& on_class(int c) const { return values_[c]; }
  const Cyclotomic& operator()(Elem x) const { return values_[group_->class_of(x)]; }
  Cyclotomic degree() const { return values_[0]; }
  bool is_rational() const;
  Rational rational_at(Elem x) const { return (*this)(x).rational(); }
  ClassFunction conj() const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values_ == b.values_; }

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
Cyclotomic eval_subset_sum(const ClassFunction& chi, const ElementSet& subset);

// Complex irreducible characters: trivial first, then by degree and values.
std::vector<ClassFunction> character_table(const GroupPtr& g, int max_order = 200);

// Galois-orbit sums of the complex irreducibles.
class RationalCharacterTable {
 public:
  explicit RationalCharacterTable(GroupPtr g, int max_order = 200);

  const GroupPtr& group() const { return group_; }
  const std::vector<ClassFunction>& irreducibles() const { return irr_; }
  int num_orbits() const { return static_cast<int>(orbits_.size()); }
  const std::vector<int>& orbit(int i) const { return orbits_[i]; }
  const ClassFunction& orbit_sum(int i) const { return sums_[i]; }
  int orbit_size(int i) const { return static_cast<int>(orbits_[i].size()); }
  // Rational value of the orbit sum at an element.
  Rational value(int i, Elem x) const { return values_[i][x]; }
  const std::vector<Rational>& values(int i) const { return values_[i]; }
  // psi(1) for a member psi of the orbit.
  Rational member_degree(int i) const;
  // Coefficients of the central idempotent e_chi in QG, indexed by element.
  std::vector<Rational> central_idempotent(int i) const;
  // Orbit index of a rational class function equal to an orbit sum; -1 if none.
  int find_orbit(const std::vector<Rational>& per_element) const;

 private:
  GroupPtr group_;
  std::vector<ClassFunction> irr_;
  std::vector<std::vector<int>> orbits_;
  std::vector<ClassFunction> sums_;
  std::vector<std::vector<Rational>> values_;
};

// Product in the group algebra QG, coefficient vectors indexed by elements.
std::vector<Rational> group_algebra_multiply(const FiniteGroup& g, const std::vector<Rational>& a,
                                             const std::vector<Rational>& b);

// Rational-valued function on a subgroup of an ambient group, indexed by ambient elements.
struct SubgroupCharacter {
  GroupPtr ambient;
  ElementSet domain;
  std::vector<Rational> values;

  static SubgroupCharacter trivial(const GroupPtr& g, const ElementSet& h);
  static SubgroupCharacter from_orbit_sum(const RationalCharacterTable& t, int orbit);
  Rational operator()(Elem x) const { return values[x]; }
};

SubgroupCharacter restrict_to(const SubgroupCharacter& chi, const ElementSet& sub);
SubgroupCharacter induce_to(const SubgroupCharacter& chi, const ElementSet& over);
// chi on the codomain pulled back along an epimorphism q.
SubgroupCharacter inflate(const SubgroupCharacter& chi, const GroupMap& q);
// Average of chi over the fibres of an epimorphism q.
SubgroupCharacter deflate(const SubgroupCharacter& chi, const GroupMap& q);
Rational inner_product(const SubgroupCharacter& a, const SubgroupCharacter& b);

// chi_V(w) = chi(l^-1 w l) on Out(V), for chi on Out(U) and an isomorphism l: U -> V.
ClassFunction transport(const ClassFunction& chi, const AutData& aut_u, const AutData& aut_v, const GroupMap& l);
// Same transport for rational values given per element of Out(U).
std::vector<Rational> transport_values(const std::vector<Rational>& chi, const AutData& aut_u,
                                       const AutData& aut_v, const GroupMap& l);

}  // namespace biset
