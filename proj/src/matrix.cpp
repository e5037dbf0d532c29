#include "doldef/matrix.hpp"

#include <stdexcept>

namespace doldef {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussRational(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const GaussRational& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const GaussRational& w = o.at(k, j);
        if (!w.is_zero()) out.at(i, j) += v * w;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in sum");
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in difference");
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

Matrix Matrix::conj_transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

std::vector<GaussRational> Matrix::apply(const std::vector<GaussRational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("Matrix: vector length mismatch");
  std::vector<GaussRational> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int r = row; r < rows_; ++r)
      if (!at(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
    GaussRational inv = GaussRational(1) / at(row, col);
    for (int c = col; c < cols_; ++c) at(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      GaussRational f = at(r, col);
      for (int c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix m(*this);
  return static_cast<int>(m.rref().size());
}

std::vector<std::vector<GaussRational>> Matrix::nullspace() const {
  Matrix m(*this);
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<GaussRational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussRational> v(cols_);
    v[free] = GaussRational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<GaussRational> Matrix::solve(const std::vector<GaussRational>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("Matrix::solve: bad rhs");
  Matrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_)
    throw std::domain_error("Matrix::solve: inconsistent system");
  std::vector<GaussRational> x(cols_);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
  return x;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::inverse: not square");
  if (rows_ == 0) return Matrix(0, 0);
  Matrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = GaussRational(1);
  }
  std::vector<int> pivots = aug.rref();
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() != rows_ - 1)
    throw std::domain_error("Matrix::inverse: singular matrix");
  Matrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
  return out;
}

Matrix Matrix::stacked(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("Matrix::stacked: column mismatch");
  Matrix out(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = o.at(i, j);
  return out;
}

Matrix Matrix::from_columns(const std::vector<std::vector<GaussRational>>& cols) {
  if (cols.empty()) return Matrix(0, 0);
  Matrix out(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int j = 0; j < out.cols(); ++j) {
    if (cols[j].size() != cols[0].size())
      throw std::invalid_argument("Matrix::from_columns: ragged input");
    for (int i = 0; i < out.rows(); ++i) out.at(i, j) = cols[j][i];
  }
  return out;
}

std::vector<GaussRational> Matrix::column(int c) const {
  std::vector<GaussRational> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

int intersection_dim(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return 0;
  int ra = a.rank();
  int rb = b.rank();
  Matrix joined(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) joined.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) joined.at(i, a.cols() + j) = b.at(i, j);
  }
  return ra + rb - joined.rank();
}

bool subspace_contains(const Matrix& space, const Matrix& sub) {
  if (sub.cols() == 0) return true;
  Matrix joined(space.rows(), space.cols() + sub.cols());
  for (int i = 0; i < space.rows(); ++i) {
    for (int j = 0; j < space.cols(); ++j) joined.at(i, j) = space.at(i, j);
    for (int j = 0; j < sub.cols(); ++j) joined.at(i, space.cols() + j) = sub.at(i, j);
  }
  return joined.rank() == space.rank();
}

}  // namespace doldef
