#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "biset/linalg.hpp"

namespace biset {

struct Term {
  int index;
  long coeff;
};

// Finite-dimensional Q-algebra with integral structure constants stored sparsely:
// b_i * b_j = sum coeff * b_index.
class SparseAlgebra {
 public:
  SparseAlgebra() = default;
  SparseAlgebra(int dim, const std::vector<std::vector<Term>>& products, RVector one);

  int dimension() const { return dim_; }
  std::span<const Term> product(int i, int j) const {
    std::size_t k = std::size_t(i) * dim_ + j;
    return {terms_.data() + offsets_[k], terms_.data() + offsets_[k + 1]};
  }
  const RVector& one() const { return one_; }
  RVector multiply(const RVector& a, const RVector& b) const;
  bool commutes_with_basis(const RVector& x) const;
  bool is_idempotent(const RVector& x) const { return multiply(x, x) == x; }

 private:
  int dim_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Term> terms_;
  RVector one_;
};

struct CenterDecomposition {
  std::vector<RVector> center_basis;
  int radical_dimension = 0;
  // Primitive idempotents of the center over Q.
  std::vector<RVector> primitive_idempotents;
};

// Center by exact linear algebra (modular elimination, rational reconstruction,
// exact verification), then splitting of its semisimple quotient into fields.
CenterDecomposition center_oracle(const SparseAlgebra& a, int max_dim = 1200);

struct SubsumSearch {
  // Index sets of the candidate subsums lying in the coefficient ring.
  std::vector<std::vector<int>> integral_subsets;
  bool connected = false;  // only the empty and the full sum qualify
};

class CoefficientRing;
SubsumSearch connectedness_search(const std::vector<RVector>& candidates, const CoefficientRing& ring,
                                  int max_candidates = 20);

}  // namespace biset
