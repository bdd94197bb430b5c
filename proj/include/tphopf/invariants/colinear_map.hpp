#pragma once

#include "tphopf/invariants/invariants.hpp"

namespace tphopf {

struct PhiFlags {
  bool unit_preserving = false;  // φ(1_H) = 1_A
  bool colinear = false;         // ρ_A∘φ = (φ⊗id)∘Δ
  bool algebra_map = false;      // φ(hh') = φ(h)φ(h')
  bool lands_in_center = false;  // im φ ⊆ A^A
};

/// φ: H → A with its verified properties.  Flags are never taken on trust;
/// they are recomputed from the matrix.
struct ColinearAlgebraMap {
  Matrix map;  // dim(A) × dim(H)
  PhiFlags flags;
};

inline PhiFlags compute_phi_flags(const Matrix& phi, const ComoduleTPAlgebra& a,
                                  const HopfAlgebraData& h) {
  if (phi.rows() != a.dim() || phi.cols() != h.dim()) throw ShapeError("phi matrix shape mismatch");
  PhiFlags flags;
  flags.unit_preserving = phi.apply(h.algebra.unit) == a.algebra().unit;
  flags.colinear =
      a.comodule.coaction * phi == kron(phi, Matrix::identity(h.dim())) * h.coalgebra.comult;

  flags.algebra_map = true;
  for (int i = 0; i < h.dim() && flags.algebra_map; ++i)
    for (int j = 0; j < h.dim(); ++j)
      if (phi.apply(h.algebra.mult.on_basis(i, j)) !=
          a.algebra().multiply(phi.col(i), phi.col(j))) {
        flags.algebra_map = false;
        break;
      }

  CenterSubspace center = tp_center(a.tp);
  flags.lands_in_center = true;
  for (int j = 0; j < h.dim(); ++j)
    if (!center.carrier.contains(phi.col(j))) {
      flags.lands_in_center = false;
      break;
    }
  return flags;
}

inline ColinearAlgebraMap make_verified_phi(const Matrix& phi, const ComoduleTPAlgebra& a,
                                            const HopfAlgebraData& h) {
  return {phi, compute_phi_flags(phi, a, h)};
}

/// φ = id on A = H (the regular fixtures).
inline ColinearAlgebraMap identity_phi(const ComoduleTPAlgebra& a, const HopfAlgebraData& h) {
  if (a.dim() != h.dim()) throw ShapeError("identity phi needs dim A = dim H");
  return make_verified_phi(Matrix::identity(h.dim()), a, h);
}

/// φ = unit∘ε, the canonical choice over the trivial Hopf algebra.
inline ColinearAlgebraMap counit_unit_phi(const ComoduleTPAlgebra& a, const HopfAlgebraData& h) {
  Matrix phi(a.dim(), h.dim());
  for (int j = 0; j < h.dim(); ++j) phi.set_col(j, vec_scale(a.algebra().unit, h.counit_of(j)));
  return make_verified_phi(phi, a, h);
}

}  // namespace tphopf
