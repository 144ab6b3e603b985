#pragma once

#include <optional>
#include <vector>

#include "biset/rational.hpp"

namespace biset {

using RVector = std::vector<Rational>;

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static RMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const RMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RMatrix operator*(const RMatrix& a, const RMatrix& b);
RMatrix operator+(const RMatrix& a, const RMatrix& b);
RMatrix operator-(const RMatrix& a, const RMatrix& b);
RMatrix operator*(const Rational& s, const RMatrix& a);
RVector operator*(const RMatrix& a, const RVector& v);
RMatrix transpose(const RMatrix& a);

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(RMatrix& a);
int rank(RMatrix a);
std::vector<RVector> nullspace(RMatrix a);
std::optional<RVector> solve(const RMatrix& a, const RVector& b);
std::optional<RMatrix> inverse(const RMatrix& a);

// Incrementally maintained reduced echelon basis of a subspace.
class RowSpace {
 public:
  explicit RowSpace(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Returns true when v was independent of the current span.
  bool add(RVector v);
  RVector reduce(RVector v) const;
  bool contains(const RVector& v) const;
  const std::vector<RVector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int dim_;
  std::vector<RVector> rows_;
  std::vector<int> pivots_;
};

bool is_zero(const RVector& v);
RVector add(const RVector& a, const RVector& b);
RVector sub(const RVector& a, const RVector& b);
RVector scale(const Rational& s, const RVector& v);
void axpy(RVector& y, const Rational& s, const RVector& x);

}  // namespace biset
