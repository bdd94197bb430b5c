#pragma once

#include <string>
#include <vector>

#include "tphopf/exactlin/tensor.hpp"
#include "tphopf/report.hpp"

namespace tphopf {

/// A finite-dimensional unital associative algebra by structure constants:
/// mult(i,j) holds the coefficients of e_i·e_j.
struct AlgebraData {
  int dim = 0;
  std::vector<std::string> basis_names;
  BilinearMap mult;  // A × A → A
  Vec unit;
  bool commutative_claimed = false;

  Vec basis(int i) const { return unit_vec(dim, i); }
  Vec multiply(const Vec& a, const Vec& b) const { return mult.apply(a, b); }
};

inline void require_algebra_shapes(const AlgebraData& a) {
  if (a.mult.left_dim() != a.dim || a.mult.right_dim() != a.dim || a.mult.out_dim() != a.dim ||
      static_cast<int>(a.unit.size()) != a.dim)
    throw ShapeError("algebra tensors do not match dim");
  if (!a.basis_names.empty() && static_cast<int>(a.basis_names.size()) != a.dim)
    throw ShapeError("basis name count does not match dim");
}

inline Report commutativity_report(const AlgebraData& a) {
  Report rep;
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j)
      rep.check("commutativity", {i, j}, a.mult.on_basis(i, j), a.mult.on_basis(j, i));
  return rep;
}

/// Checks unit and associativity on all basis tuples (bilinearity makes this
/// complete), plus commutativity when the data claims it.
inline Report verify_algebra(const AlgebraData& a) {
  require_algebra_shapes(a);
  Report rep;
  for (int i = 0; i < a.dim; ++i) {
    rep.check("unit-left", {i}, a.mult.apply(a.unit, a.basis(i)), a.basis(i));
    rep.check("unit-right", {i}, a.mult.apply(a.basis(i), a.unit), a.basis(i));
  }
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k)
        rep.check("associativity", {i, j, k}, a.mult.apply(a.mult.on_basis(i, j), a.basis(k)),
                  a.mult.apply(a.basis(i), a.mult.on_basis(j, k)));
  if (a.commutative_claimed) rep.absorb(commutativity_report(a));
  return rep;
}

inline bool is_commutative(const AlgebraData& a) { return commutativity_report(a).pass; }

/// Matrix of left multiplication by x.
inline Matrix left_mult_matrix(const AlgebraData& a, const Vec& x) { return a.mult.left_matrix(x); }

}  // namespace tphopf
