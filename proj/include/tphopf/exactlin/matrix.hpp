#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tphopf/exactlin/rational.hpp"

namespace tphopf {

/// Dense row-major matrix over the rationals.  Values are immutable in spirit:
/// every operation returns a fresh matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != cols) throw ShapeError("row length mismatch");
      for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    }
    return m;
  }

  static Matrix from_cols(const std::vector<Vec>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
      if (static_cast<int>(cols[j].size()) != rows) throw ShapeError("column length mismatch");
      for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

  Vec row(int i) const {
    Vec v(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = (*this)(i, j);
    return v;
  }

  Vec col(int j) const {
    Vec v(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = (*this)(i, j);
    return v;
  }

  void set_col(int j, const Vec& v) {
    if (static_cast<int>(v.size()) != rows_) throw ShapeError("column length mismatch");
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[static_cast<size_t>(i)];
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < rhs.cols_; ++j) {
          const Rational& b = rhs(k, j);
          if (b != 0) out(i, j) += a * b;
        }
      }
    return out;
  }

  Matrix operator+(const Matrix& rhs) const {
    require_same_shape(rhs);
    Matrix out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] += rhs.e_[i];
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    require_same_shape(rhs);
    Matrix out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] -= rhs.e_[i];
    return out;
  }

  Matrix scaled(const Rational& c) const {
    Matrix out = *this;
    for (auto& x : out.e_) x *= c;
    return out;
  }

  Vec apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw ShapeError("matrix/vector shape mismatch");
    Vec y(static_cast<size_t>(rows_));
    for (int j = 0; j < cols_; ++j) {
      const Rational& c = x[static_cast<size_t>(j)];
      if (c == 0) continue;
      for (int i = 0; i < rows_; ++i) {
        const Rational& a = (*this)(i, j);
        if (a != 0) y[static_cast<size_t>(i)] += a * c;
      }
    }
    return y;
  }

 private:
  void require_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> e_;
};

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw ShapeError("vstack column mismatch");
  int cols = a.rows() != 0 ? a.cols() : b.cols();
  Matrix out(a.rows() + b.rows(), cols);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < cols; ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

/// Kronecker product with row-major flattening: the left factor is the slow
/// index, matching the global tensor convention.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          if (b(p, q) != 0) out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return out;
}

struct Echelon {
  Matrix mat;               // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column per surviving row, strictly increasing
  int rank = 0;
};

/// Gauss-Jordan over exact rationals; the output is the canonical RREF of the
/// row space.
inline Echelon reduced_row_echelon(Matrix m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots), r};
}

inline int rank(const Matrix& m) { return reduced_row_echelon(m).rank; }

/// Basis of the solution space of m·x = 0, one row per free column of the RREF.
inline Matrix kernel_basis(const Matrix& m) {
  Echelon e = reduced_row_echelon(m);
  int cols = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Vec> rows;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vec v = zero_vec(cols);
    v[static_cast<size_t>(f)] = 1;
    for (int r = 0; r < e.rank; ++r) v[static_cast<size_t>(e.pivots[static_cast<size_t>(r)])] = -e.mat(r, f);
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(rows, cols);
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.rank < n || e.pivots[static_cast<size_t>(n - 1)] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.mat(i, n + j);
  return inv;
}

}  // namespace tphopf
