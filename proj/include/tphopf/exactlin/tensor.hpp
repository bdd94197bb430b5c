#pragma once

#include <numeric>
#include <vector>

#include "tphopf/exactlin/matrix.hpp"

namespace tphopf {

// Global flattening convention: factors are listed left to right and the
// leftmost factor is the slowest index, so flatten({i,j}) = i·dim_j + j.
// Because the convention is associative, a composite factor of shape {a,b}
// can be treated transparently as one factor of dimension a·b.
struct TensorShape {
  std::vector<int> dims;

  size_t total() const {
    size_t t = 1;
    for (int d : dims) t *= static_cast<size_t>(d);
    return t;
  }

  size_t flatten(const std::vector<int>& idx) const {
    if (idx.size() != dims.size()) throw ShapeError("tensor index arity mismatch");
    size_t flat = 0;
    for (size_t k = 0; k < dims.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= dims[k]) throw ShapeError("tensor index out of range");
      flat = flat * static_cast<size_t>(dims[k]) + static_cast<size_t>(idx[k]);
    }
    return flat;
  }

  std::vector<int> unflatten(size_t flat) const {
    std::vector<int> idx(dims.size());
    for (size_t k = dims.size(); k-- > 0;) {
      idx[k] = static_cast<int>(flat % static_cast<size_t>(dims[k]));
      flat /= static_cast<size_t>(dims[k]);
    }
    return idx;
  }
};

namespace detail {
inline size_t block_before(const std::vector<int>& dims, int leg) {
  size_t n = 1;
  for (int k = 0; k < leg; ++k) n *= static_cast<size_t>(dims[static_cast<size_t>(k)]);
  return n;
}
inline size_t block_after(const std::vector<int>& dims, int leg) {
  size_t n = 1;
  for (size_t k = static_cast<size_t>(leg) + 1; k < dims.size(); ++k) n *= static_cast<size_t>(dims[k]);
  return n;
}
}  // namespace detail

/// Applies a linear map to one tensor leg: the leg's dimension f.cols()
/// becomes f.rows().
inline Vec apply_factor(const Matrix& f, const Vec& t, const std::vector<int>& dims, int leg) {
  int mid = dims[static_cast<size_t>(leg)];
  if (f.cols() != mid) throw ShapeError("apply_factor: map does not fit leg");
  size_t left = detail::block_before(dims, leg);
  size_t right = detail::block_after(dims, leg);
  if (t.size() != left * static_cast<size_t>(mid) * right) throw ShapeError("apply_factor: tensor size mismatch");

  Vec out(left * static_cast<size_t>(f.rows()) * right);
  for (size_t l = 0; l < left; ++l)
    for (int m = 0; m < mid; ++m) {
      size_t src_base = (l * static_cast<size_t>(mid) + static_cast<size_t>(m)) * right;
      for (size_t r = 0; r < right; ++r) {
        const Rational& c = t[src_base + r];
        if (c == 0) continue;
        for (int m2 = 0; m2 < f.rows(); ++m2) {
          const Rational& a = f(m2, m);
          if (a != 0)
            out[(l * static_cast<size_t>(f.rows()) + static_cast<size_t>(m2)) * right + r] += a * c;
        }
      }
    }
  return out;
}

inline Vec swap_factors(const Vec& t, const std::vector<int>& dims, int a, int b) {
  TensorShape shape{dims};
  std::vector<int> swapped = dims;
  std::swap(swapped[static_cast<size_t>(a)], swapped[static_cast<size_t>(b)]);
  TensorShape out_shape{swapped};
  Vec out(t.size());
  for (size_t flat = 0; flat < t.size(); ++flat) {
    if (t[flat] == 0) continue;
    std::vector<int> idx = shape.unflatten(flat);
    std::swap(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]);
    out[out_shape.flatten(idx)] = t[flat];
  }
  return out;
}

/// Structure constants of a bilinear map V_a × V_b → V_c on fixed bases.
class BilinearMap {
 public:
  BilinearMap() = default;
  BilinearMap(int left_dim, int right_dim, int out_dim)
      : da_(left_dim),
        db_(right_dim),
        dc_(out_dim),
        e_(static_cast<size_t>(left_dim) * static_cast<size_t>(right_dim) * static_cast<size_t>(out_dim)) {}

  int left_dim() const { return da_; }
  int right_dim() const { return db_; }
  int out_dim() const { return dc_; }

  bool operator==(const BilinearMap&) const = default;

  Rational& at(int i, int j, int k) {
    return e_[(static_cast<size_t>(i) * db_ + static_cast<size_t>(j)) * dc_ + static_cast<size_t>(k)];
  }
  const Rational& at(int i, int j, int k) const {
    return e_[(static_cast<size_t>(i) * db_ + static_cast<size_t>(j)) * dc_ + static_cast<size_t>(k)];
  }

  Vec on_basis(int i, int j) const {
    Vec v(static_cast<size_t>(dc_));
    for (int k = 0; k < dc_; ++k) v[static_cast<size_t>(k)] = at(i, j, k);
    return v;
  }

  void set_on_basis(int i, int j, const Vec& v) {
    if (static_cast<int>(v.size()) != dc_) throw ShapeError("structure constant length mismatch");
    for (int k = 0; k < dc_; ++k) at(i, j, k) = v[static_cast<size_t>(k)];
  }

  Vec apply(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != da_ || static_cast<int>(y.size()) != db_)
      throw ShapeError("bilinear map operand mismatch");
    Vec out(static_cast<size_t>(dc_));
    for (int i = 0; i < da_; ++i) {
      if (x[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; j < db_; ++j) {
        if (y[static_cast<size_t>(j)] == 0) continue;
        Rational c = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
        for (int k = 0; k < dc_; ++k) {
          const Rational& s = at(i, j, k);
          if (s != 0) out[static_cast<size_t>(k)] += c * s;
        }
      }
    }
    return out;
  }

  /// Matrix of y ↦ f(x, y).
  Matrix left_matrix(const Vec& x) const {
    Matrix m(dc_, db_);
    for (int j = 0; j < db_; ++j) m.set_col(j, apply(x, unit_vec(db_, j)));
    return m;
  }

  /// Matrix of x ↦ f(x, y).
  Matrix right_matrix(const Vec& y) const {
    Matrix m(dc_, da_);
    for (int i = 0; i < da_; ++i) m.set_col(i, apply(unit_vec(da_, i), y));
    return m;
  }

  Matrix basis_left_matrix(int i) const { return left_matrix(unit_vec(da_, i)); }

 private:
  int da_ = 0, db_ = 0, dc_ = 0;
  std::vector<Rational> e_;
};

/// For u ∈ U₁⊗U₂ and v ∈ V₁⊗V₂ computes Σ f(u₁,v₁) ⊗ g(u₂,v₂) — the
/// leg-wise combination behind every Sweedler-style compatibility.
inline Vec combine_pair(const Vec& u, int u1, int u2, const Vec& v, int v1, int v2,
                        const BilinearMap& f, const BilinearMap& g) {
  if (u.size() != static_cast<size_t>(u1) * static_cast<size_t>(u2) ||
      v.size() != static_cast<size_t>(v1) * static_cast<size_t>(v2))
    throw ShapeError("combine_pair operand mismatch");
  if (f.left_dim() != u1 || f.right_dim() != v1 || g.left_dim() != u2 || g.right_dim() != v2)
    throw ShapeError("combine_pair map mismatch");
  int fc = f.out_dim(), gc = g.out_dim();
  Vec out(static_cast<size_t>(fc) * static_cast<size_t>(gc));
  for (int i = 0; i < u1; ++i)
    for (int p = 0; p < u2; ++p) {
      const Rational& cu = u[static_cast<size_t>(i) * u2 + static_cast<size_t>(p)];
      if (cu == 0) continue;
      for (int j = 0; j < v1; ++j)
        for (int q = 0; q < v2; ++q) {
          const Rational& cv = v[static_cast<size_t>(j) * v2 + static_cast<size_t>(q)];
          if (cv == 0) continue;
          Rational c = cu * cv;
          for (int k = 0; k < fc; ++k) {
            const Rational& cf = f.at(i, j, k);
            if (cf == 0) continue;
            for (int r = 0; r < gc; ++r) {
              const Rational& cg = g.at(p, q, r);
              if (cg != 0) out[static_cast<size_t>(k) * gc + static_cast<size_t>(r)] += c * cf * cg;
            }
          }
        }
    }
  return out;
}

/// Multiplies the two legs of t ∈ V⊗V through f: Σ t_{ij} f(e_i, e_j).
inline Vec contract_product(const Vec& t, const BilinearMap& f) {
  int d1 = f.left_dim(), d2 = f.right_dim();
  if (t.size() != static_cast<size_t>(d1) * static_cast<size_t>(d2))
    throw ShapeError("contract_product size mismatch");
  Vec out(static_cast<size_t>(f.out_dim()));
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) {
      const Rational& c = t[static_cast<size_t>(i) * d2 + static_cast<size_t>(j)];
      if (c == 0) continue;
      for (int k = 0; k < f.out_dim(); ++k) {
        const Rational& s = f.at(i, j, k);
        if (s != 0) out[static_cast<size_t>(k)] += c * s;
      }
    }
  return out;
}

inline Vec outer_product(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

}  // namespace tphopf
