#pragma once

#include <string>
#include <vector>

#include "tphopf/hopfcore/hopf.hpp"

namespace tphopf {

namespace detail {
inline std::string cyclic_name(const std::vector<int>& orders, const std::vector<int>& exps) {
  std::string name;
  for (size_t f = 0; f < exps.size(); ++f) {
    if (exps[f] == 0) continue;
    if (!name.empty()) name += "*";
    std::string gen = orders.size() == 1 ? "g" : "g" + std::to_string(f + 1);
    name += gen;
    if (exps[f] > 1) name += "^" + std::to_string(exps[f]);
  }
  return name.empty() ? "1" : name;
}
}  // namespace detail

/// Group algebra ℚ[G] of a finite abelian group given as a product of cyclic
/// groups.  Grouplike comultiplication, antipode g ↦ g⁻¹.
inline HopfAlgebraData group_algebra(const std::vector<int>& cyclic_orders) {
  for (int n : cyclic_orders)
    if (n < 1) throw ShapeError("cyclic order must be positive");
  TensorShape shape{cyclic_orders};
  const int d = static_cast<int>(shape.total());

  AlgebraData alg;
  alg.dim = d;
  alg.mult = BilinearMap(d, d, d);
  alg.unit = unit_vec(d, 0);
  alg.commutative_claimed = true;
  for (int i = 0; i < d; ++i) {
    std::vector<int> gi = shape.unflatten(static_cast<size_t>(i));
    alg.basis_names.push_back(detail::cyclic_name(cyclic_orders, gi));
    for (int j = 0; j < d; ++j) {
      std::vector<int> gj = shape.unflatten(static_cast<size_t>(j));
      std::vector<int> gk(gi.size());
      for (size_t f = 0; f < gi.size(); ++f) gk[f] = (gi[f] + gj[f]) % cyclic_orders[f];
      alg.mult.at(i, j, static_cast<int>(shape.flatten(gk))) = 1;
    }
  }

  CoalgebraData co;
  co.dim = d;
  co.comult = Matrix(d * d, d);
  co.counit = Matrix(1, d);
  Matrix antipode(d, d);
  for (int i = 0; i < d; ++i) {
    co.comult(i * d + i, i) = 1;  // Δ(g) = g⊗g
    co.counit(0, i) = 1;
    std::vector<int> gi = shape.unflatten(static_cast<size_t>(i));
    std::vector<int> ginv(gi.size());
    for (size_t f = 0; f < gi.size(); ++f) ginv[f] = (cyclic_orders[f] - gi[f]) % cyclic_orders[f];
    antipode(static_cast<int>(shape.flatten(ginv)), i) = 1;
  }

  HopfAlgebraData h{std::move(alg), std::move(co), std::move(antipode), {}};
  h.antipode_inverse = *inverse(h.antipode);
  return h;
}

/// The 1-dimensional Hopf algebra ℚ.
inline HopfAlgebraData trivial_hopf() { return group_algebra({1}); }

/// Sweedler's 4-dimensional Hopf algebra: g² = 1, x² = 0, xg = -gx,
/// Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, S(g) = g, S(x) = -gx.  The smallest Hopf
/// algebra with S² ≠ id.
inline HopfAlgebraData sweedler_h4() {
  enum { one, g, x, gx };
  AlgebraData alg;
  alg.dim = 4;
  alg.basis_names = {"1", "g", "x", "gx"};
  alg.mult = BilinearMap(4, 4, 4);
  alg.unit = unit_vec(4, one);
  alg.commutative_claimed = false;
  auto set = [&](int i, int j, int k, int coeff) { alg.mult.at(i, j, k) = coeff; };
  for (int j = 0; j < 4; ++j) set(one, j, j, 1);
  set(g, one, g, 1);
  set(g, g, one, 1);
  set(g, x, gx, 1);
  set(g, gx, x, 1);
  set(x, one, x, 1);
  set(x, g, gx, -1);
  set(gx, one, gx, 1);
  set(gx, g, x, -1);
  // x·x = x·gx = gx·x = gx·gx = 0

  CoalgebraData co;
  co.dim = 4;
  co.comult = Matrix(16, 4);
  co.counit = Matrix(1, 4);
  auto put = [&](int col, int left, int right, int coeff) { co.comult(left * 4 + right, col) = coeff; };
  put(one, one, one, 1);
  put(g, g, g, 1);
  put(x, x, one, 1);
  put(x, g, x, 1);
  put(gx, gx, g, 1);
  put(gx, one, gx, 1);
  co.counit(0, one) = 1;
  co.counit(0, g) = 1;

  Matrix antipode(4, 4);
  antipode(one, one) = 1;
  antipode(g, g) = 1;
  antipode(gx, x) = -1;  // S(x) = -gx
  antipode(x, gx) = 1;   // S(gx) = x

  HopfAlgebraData h{std::move(alg), std::move(co), std::move(antipode), {}};
  h.antipode_inverse = *inverse(h.antipode);
  return h;
}

/// ℚ[x]/(xⁿ) with basis 1, x, …, x^{n-1}.
inline AlgebraData truncated_polynomial_algebra(int n) {
  if (n < 1) throw ShapeError("truncation order must be positive");
  AlgebraData alg;
  alg.dim = n;
  alg.mult = BilinearMap(n, n, n);
  alg.unit = unit_vec(n, 0);
  alg.commutative_claimed = true;
  for (int i = 0; i < n; ++i) {
    alg.basis_names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    for (int j = 0; j < n; ++j)
      if (i + j < n) alg.mult.at(i, j, i + j) = 1;
  }
  return alg;
}

/// d/dx on ℚ[x]/(xⁿ).
inline Matrix ddx_derivation(int n) {
  Matrix d(n, n);
  for (int i = 1; i < n; ++i) d(i - 1, i) = i;
  return d;
}

/// The Euler derivation x·d/dx; it preserves the degree grading.
inline Matrix euler_derivation(int n) {
  Matrix d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = i;
  return d;
}

}  // namespace tphopf
