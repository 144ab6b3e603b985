#include "biset/linalg.hpp"

#include <stdexcept>

namespace biset {

RMatrix RMatrix::identity(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  RMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) == 0) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
  RMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RMatrix operator-(const RMatrix& a, const RMatrix& b) {
  RMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

RMatrix operator*(const Rational& s, const RMatrix& a) {
  RMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

RVector operator*(const RMatrix& a, const RVector& v) {
  RVector out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

RMatrix transpose(const RMatrix& a) {
  RMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

std::vector<int> rref(RMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < a.rows(); ++i) {
      if (sgn(a(i, col)) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    Rational inv = 1 / a(row, col);
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      Rational f = a(i, col);
      for (int j = col; j < a.cols(); ++j)
        if (sgn(a(row, j)) != 0) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(RMatrix a) { return static_cast<int>(rref(a).size()); }

std::vector<RVector> nullspace(RMatrix a) {
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RVector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVector> solve(const RMatrix& a, const RVector& b) {
  RMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(int(r), a.cols());
  return x;
}

std::optional<RMatrix> inverse(const RMatrix& a) {
  int n = a.rows();
  RMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (int(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  RMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

RVector RowSpace::reduce(RVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    Rational f = v[p];
    const auto& row = rows_[r];
    for (int j = 0; j < dim_; ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
  return v;
}

bool RowSpace::add(RVector v) {
  v = reduce(std::move(v));
  int p = -1;
  for (int j = 0; j < dim_; ++j) {
    if (sgn(v[j]) != 0) {
      p = j;
      break;
    }
  }
  if (p < 0) return false;
  Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Rational f = row[p];
    for (int j = 0; j < dim_; ++j)
      if (sgn(v[j]) != 0) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(const RVector& v) const { return is_zero(reduce(v)); }

bool is_zero(const RVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

RVector add(const RVector& a, const RVector& b) {
  RVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RVector sub(const RVector& a, const RVector& b) {
  RVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

RVector scale(const Rational& s, const RVector& v) {
  RVector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
  return c;
}

void axpy(RVector& y, const Rational& s, const RVector& x) {
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += s * x[i];
}

}  // namespace biset
