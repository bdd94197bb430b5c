#pragma once

#include "tphopf/hopfcore/hopf.hpp"

namespace tphopf {

/// Right H-comodule by its structure map: coaction is the (dim·dimH)×dim
/// matrix of ρ, column j = ρ(e_j) flattened in M⊗H.
struct ComoduleData {
  int dim = 0;
  Matrix coaction;

  Vec coact_of(int j) const { return coaction.col(j); }
};

inline void require_comodule_shapes(const ComoduleData& m, const HopfAlgebraData& h) {
  if (m.coaction.rows() != m.dim * h.dim() || m.coaction.cols() != m.dim)
    throw ShapeError("coaction matrix does not match dims");
}

/// Coassociativity and counit law on every basis element.
inline Report verify_comodule(const ComoduleData& m, const HopfAlgebraData& h) {
  require_comodule_shapes(m, h);
  Report rep;
  const int dm = m.dim, dh = h.dim();
  for (int j = 0; j < dm; ++j) {
    Vec t = m.coact_of(j);
    rep.check("comodule-coassoc", {j}, apply_factor(h.coalgebra.comult, t, {dm, dh}, 1),
              apply_factor(m.coaction, t, {dm, dh}, 0));
    rep.check("comodule-counit", {j}, apply_factor(h.coalgebra.counit, t, {dm, dh}, 1),
              unit_vec(dm, j));
  }
  return rep;
}

/// The comodule (M, Δ) of H over itself.
inline ComoduleData regular_comodule(const HopfAlgebraData& h) {
  return {h.dim(), h.coalgebra.comult};
}

/// m ↦ m⊗1_H.
inline ComoduleData trivial_comodule(int dim, const HopfAlgebraData& h) {
  ComoduleData c{dim, Matrix(dim * h.dim(), dim)};
  for (int j = 0; j < dim; ++j)
    for (int l = 0; l < h.dim(); ++l)
      c.coaction(j * h.dim() + l, j) = h.algebra.unit[static_cast<size_t>(l)];
  return c;
}

}  // namespace tphopf
