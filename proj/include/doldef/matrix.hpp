#ifndef DOLDEF_MATRIX_HPP
#define DOLDEF_MATRIX_HPP

#include <vector>

#include "doldef/rational.hpp"

namespace doldef {

/// Dense matrix over the Gaussian rationals. All elimination is exact
/// Gauss-Jordan over the field Q(i); no floating point.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussRational& at(int r, int c) { return a_[r * cols_ + c]; }
  const GaussRational& at(int r, int c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Matrix conj_transpose() const;

  std::vector<GaussRational> apply(const std::vector<GaussRational>& v) const;

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref();

  int rank() const;

  /// Basis of the right nullspace, one column vector per basis element.
  std::vector<std::vector<GaussRational>> nullspace() const;

  /// Solves A x = b exactly; throws std::domain_error if inconsistent.
  std::vector<GaussRational> solve(const std::vector<GaussRational>& b) const;

  /// Exact inverse; throws std::domain_error if singular.
  Matrix inverse() const;

  /// Stacks rows of `o` below this matrix (column counts must agree).
  Matrix stacked(const Matrix& o) const;

  /// Appends the given column vectors on the right / builds from columns.
  static Matrix from_columns(const std::vector<std::vector<GaussRational>>& cols);

  std::vector<GaussRational> column(int c) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussRational> a_;
};

/// dim(span(A-columns) ∩ span(B-columns)), exact.
int intersection_dim(const Matrix& a, const Matrix& b);

/// True iff every column of `sub` lies in span(columns of `space`).
bool subspace_contains(const Matrix& space, const Matrix& sub);

}  // namespace doldef

#endif
