#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tphopf/exactlin/matrix.hpp"

namespace tphopf {

/// A subspace of ℚ^n held as the RREF basis of its row space.  Equal
/// subspaces have identical basis matrices, whatever generators built them.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(int ambient) { return Subspace(ambient, Matrix(0, ambient), {}); }

  static Subspace full(int ambient) {
    std::vector<int> pivots(static_cast<size_t>(ambient));
    for (int i = 0; i < ambient; ++i) pivots[static_cast<size_t>(i)] = i;
    return Subspace(ambient, Matrix::identity(ambient), std::move(pivots));
  }

  static Subspace span(int ambient, const std::vector<Vec>& generators) {
    Echelon e = reduced_row_echelon(Matrix::from_rows(generators, ambient));
    return Subspace(ambient, std::move(e.mat), std::move(e.pivots));
  }

  static Subspace row_space(const Matrix& m) {
    Echelon e = reduced_row_echelon(m);
    return Subspace(m.cols(), std::move(e.mat), std::move(e.pivots));
  }

  static Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

  /// Solution space of m·x = 0.
  static Subspace kernel_of(const Matrix& m) { return row_space(kernel_basis(m)); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(int k) const { return basis_.row(k); }
  const std::vector<int>& pivot_columns() const { return pivots_; }

  bool operator==(const Subspace&) const = default;

  /// Coordinates of v in the basis rows; nullopt when v is not a member.
  std::optional<Vec> coordinates(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw ShapeError("ambient dimension mismatch");
    Vec rest = v;
    Vec coords(static_cast<size_t>(dim()));
    for (int r = 0; r < dim(); ++r) {
      Rational c = rest[static_cast<size_t>(pivots_[static_cast<size_t>(r)])];
      coords[static_cast<size_t>(r)] = c;
      if (c != 0)
        for (int j = 0; j < ambient_; ++j) rest[static_cast<size_t>(j)] -= c * basis_(r, j);
    }
    if (!is_zero(rest)) return std::nullopt;
    return coords;
  }

  bool contains(const Vec& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    require_same_ambient(other);
    for (int r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_vector(r))) return false;
    return true;
  }

  Vec from_coordinates(const Vec& coords) const {
    if (static_cast<int>(coords.size()) != dim()) throw ShapeError("coordinate length mismatch");
    Vec v = zero_vec(ambient_);
    for (int r = 0; r < dim(); ++r) add_scaled(v, coords[static_cast<size_t>(r)], basis_vector(r));
    return v;
  }

  Subspace sum(const Subspace& other) const {
    require_same_ambient(other);
    Echelon e = reduced_row_echelon(vstack(basis_, other.basis_));
    return Subspace(ambient_, std::move(e.mat), std::move(e.pivots));
  }

  /// Zassenhaus: rows [a|a] for a in this, [b|0] for b in other; the rows of
  /// the eliminated block with zero left half span the intersection.
  Subspace intersect(const Subspace& other) const {
    require_same_ambient(other);
    int n = ambient_;
    Matrix block(dim() + other.dim(), 2 * n);
    for (int r = 0; r < dim(); ++r)
      for (int j = 0; j < n; ++j) block(r, j) = block(r, n + j) = basis_(r, j);
    for (int r = 0; r < other.dim(); ++r)
      for (int j = 0; j < n; ++j) block(dim() + r, j) = other.basis_(r, j);
    Echelon e = reduced_row_echelon(std::move(block));
    std::vector<Vec> inter;
    for (int r = 0; r < e.rank; ++r)
      if (e.pivots[static_cast<size_t>(r)] >= n) {
        Vec v(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = e.mat(r, n + j);
        inter.push_back(std::move(v));
      }
    return span(n, inter);
  }

  /// Standard basis vectors at the non-pivot columns: coset representatives of
  /// ambient/this.
  std::vector<Vec> quotient_representatives() const {
    std::vector<Vec> reps;
    for (int c : non_pivot_columns()) reps.push_back(unit_vec(ambient_, c));
    return reps;
  }

  std::vector<int> non_pivot_columns() const {
    std::vector<bool> is_pivot(static_cast<size_t>(ambient_), false);
    for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<int> out;
    for (int c = 0; c < ambient_; ++c)
      if (!is_pivot[static_cast<size_t>(c)]) out.push_back(c);
    return out;
  }

 private:
  Subspace(int ambient, Matrix basis, std::vector<int> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void require_same_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw ShapeError("ambient dimension mismatch");
  }

  int ambient_ = 0;
  Matrix basis_;
  std::vector<int> pivots_;
};

struct SubspaceOps {
  Subspace intersect;
  Subspace sum;
  bool contains = false;           // a ⊇ b
  std::vector<Vec> quotient_basis; // representatives of ambient / a
};

inline SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  return {a.intersect(b), a.sum(b), a.contains(b), a.quotient_representatives()};
}

/// Quotient of an ambient space by a relations subspace, with coordinates on
/// the standard-basis representatives at the non-pivot columns.
class QuotientMap {
 public:
  explicit QuotientMap(Subspace relations)
      : relations_(std::move(relations)), rep_cols_(relations_.non_pivot_columns()) {}

  int ambient_dim() const { return relations_.ambient_dim(); }
  int dim() const { return static_cast<int>(rep_cols_.size()); }
  const Subspace& relations() const { return relations_; }
  const std::vector<int>& representative_columns() const { return rep_cols_; }

  Vec representative(int k) const { return unit_vec(ambient_dim(), rep_cols_[static_cast<size_t>(k)]); }

  /// Coset coordinates of an ambient vector.
  Vec reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_dim()) throw ShapeError("ambient dimension mismatch");
    Vec w = v;
    const Matrix& rel = relations_.basis();
    const auto& pivots = relations_.pivot_columns();
    for (int r = 0; r < relations_.dim(); ++r) {
      Rational c = w[static_cast<size_t>(pivots[static_cast<size_t>(r)])];
      if (c != 0)
        for (int j = 0; j < ambient_dim(); ++j) w[static_cast<size_t>(j)] -= c * rel(r, j);
    }
    Vec coords(rep_cols_.size());
    for (size_t k = 0; k < rep_cols_.size(); ++k) coords[k] = w[static_cast<size_t>(rep_cols_[k])];
    return coords;
  }

  /// The projection in matrix form (dim x ambient).
  Matrix reduce_matrix() const {
    Matrix m(dim(), ambient_dim());
    for (int j = 0; j < ambient_dim(); ++j) m.set_col(j, reduce(unit_vec(ambient_dim(), j)));
    return m;
  }

 private:
  Subspace relations_;
  std::vector<int> rep_cols_;
};

struct LinearSolution {
  bool consistent = true;
  Vec particular;      // one solution (zero for homogeneous systems)
  Subspace homogeneous;  // solution space of the associated homogeneous system
};

/// Stacked-kernel semantics: solves every (matrix, target) pair at once.  An
/// inconsistent affine stack comes back with consistent = false.
inline LinearSolution solve_linear_system(const std::vector<std::pair<Matrix, Vec>>& constraints,
                                          int unknowns) {
  Matrix stacked(0, unknowns);
  Vec target;
  for (const auto& [m, t] : constraints) {
    if (m.cols() != unknowns) throw ShapeError("constraint column mismatch");
    if (static_cast<int>(t.size()) != m.rows()) throw ShapeError("constraint target mismatch");
    stacked = vstack(stacked, m);
    target.insert(target.end(), t.begin(), t.end());
  }
  LinearSolution sol;
  sol.homogeneous = Subspace::kernel_of(stacked);
  sol.particular = zero_vec(unknowns);
  if (is_zero(target)) return sol;

  Matrix aug(stacked.rows(), unknowns + 1);
  for (int i = 0; i < stacked.rows(); ++i) {
    for (int j = 0; j < unknowns; ++j) aug(i, j) = stacked(i, j);
    aug(i, unknowns) = target[static_cast<size_t>(i)];
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  for (int p : e.pivots)
    if (p == unknowns) {
      sol.consistent = false;
      return sol;
    }
  for (int r = 0; r < e.rank; ++r)
    sol.particular[static_cast<size_t>(e.pivots[static_cast<size_t>(r)])] = e.mat(r, unknowns);
  return sol;
}

}  // namespace tphopf
