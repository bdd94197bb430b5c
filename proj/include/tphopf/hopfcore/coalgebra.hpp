#pragma once

#include "tphopf/exactlin/tensor.hpp"
#include "tphopf/report.hpp"

namespace tphopf {

/// Coalgebra by structure constants.  comult is the (dim²)×dim matrix of
/// Δ: column i holds Δ(e_i) flattened in the tensor square; counit is 1×dim.
struct CoalgebraData {
  int dim = 0;
  Matrix comult;
  Matrix counit;

  Vec comult_of(int i) const { return comult.col(i); }
};

inline void require_coalgebra_shapes(const CoalgebraData& c) {
  if (c.comult.rows() != c.dim * c.dim || c.comult.cols() != c.dim || c.counit.rows() != 1 ||
      c.counit.cols() != c.dim)
    throw ShapeError("coalgebra tensors do not match dim");
}

inline Report verify_coalgebra(const CoalgebraData& c) {
  require_coalgebra_shapes(c);
  Report rep;
  const int d = c.dim;
  for (int i = 0; i < d; ++i) {
    Vec t = c.comult_of(i);
    // (Δ⊗id)Δ = (id⊗Δ)Δ in H⊗H⊗H
    rep.check("coassociativity", {i}, apply_factor(c.comult, t, {d, d}, 0),
              apply_factor(c.comult, t, {d, d}, 1));
    // (ε⊗id)Δ = id = (id⊗ε)Δ; the ε leg has dimension 1 and flattens away
    rep.check("counit-left", {i}, apply_factor(c.counit, t, {d, d}, 0), unit_vec(d, i));
    rep.check("counit-right", {i}, apply_factor(c.counit, t, {d, d}, 1), unit_vec(d, i));
  }
  return rep;
}

inline bool is_cocommutative(const CoalgebraData& c) {
  for (int i = 0; i < c.dim; ++i) {
    Vec t = c.comult_of(i);
    if (swap_factors(t, {c.dim, c.dim}, 0, 1) != t) return false;
  }
  return true;
}

}  // namespace tphopf
