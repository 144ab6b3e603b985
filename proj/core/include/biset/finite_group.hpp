#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace biset {

using Elem = int;
using Perm = std::vector<int>;

// Raised when a requested object exceeds a configured size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two independent computations disagree.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bitset over the elements 0..universe-1 of a group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  static ElementSet from_members(int universe, std::span<const Elem> members);

  int universe() const { return universe_; }
  void insert(Elem x) { words_[x >> 6] |= (std::uint64_t{1} << (x & 63)); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
  int size() const;
  std::vector<Elem> members() const;
  bool subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const { return words_ == other.words_; }
  std::size_t hash() const;
  // Lexicographic comparison of the sorted member lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b);

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

struct ConjugacyClass {
  Elem representative;
  int size;
  int element_order;
  std::vector<Elem> members;
};

// Finite group given by its full multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  static FiniteGroup from_permutations(std::string name, int degree, const std::vector<Perm>& generators,
                                       int max_order = 100000);
  static FiniteGroup from_table(std::string name, int order, std::vector<int> table);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name = "");

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv_[g]); }
  Elem power(Elem a, long k) const;
  int element_order(Elem a) const { return elem_order_[a]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(Elem a) const { return class_of_[a]; }
  // Class index of g_i^k for the representative of class i.
  int power_class(int cls, long k) const;

  ElementSet all() const;
  ElementSet make_set() const { return ElementSet(n_); }

  // Permutation realization when the group was built from permutations.
  const std::vector<Perm>& permutations() const { return perms_; }
  int degree() const { return degree_; }
  const std::vector<Perm>& generator_perms() const { return gen_perms_; }
  std::uint64_t content_hash() const;

 private:
  void finish();

  std::string name_;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  int exponent_ = 1;
  bool abelian_ = true;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<Perm> perms_;
  std::vector<Perm> gen_perms_;
  int degree_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup generated by gens (closure under multiplication).
ElementSet generate(const FiniteGroup& g, std::span<const Elem> gens);
// Subgroup generated by h and x, where h is already a subgroup.
ElementSet join(const FiniteGroup& g, const ElementSet& h, Elem x);
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
ElementSet conjugate(const FiniteGroup& g, Elem by, const ElementSet& h);
ElementSet normalizer(const FiniteGroup& g, const ElementSet& h);
ElementSet centralizer(const FiniteGroup& g, const ElementSet& h);
bool is_normal(const FiniteGroup& g, const ElementSet& h, const ElementSet& in);
// Greedy short generating sequence for the subgroup h.
std::vector<Elem> generating_sequence(const FiniteGroup& g, const ElementSet& h);

}  // namespace biset
