#pragma once

#include <utility>

#include "tphopf/hopfcore/algebra.hpp"
#include "tphopf/hopfcore/coalgebra.hpp"

namespace tphopf {

struct HopfAlgebraData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  Matrix antipode;          // dim × dim
  Matrix antipode_inverse;  // filled in by verify_hopf / the builders

  int dim() const { return algebra.dim; }
  Vec comult_of(int i) const { return coalgebra.comult_of(i); }
  Rational counit_of(int i) const { return coalgebra.counit(0, i); }
};

/// Full Hopf verification: algebra and coalgebra axioms, bialgebra
/// compatibility, both antipode identities.  Computes and stores S⁻¹; a
/// singular antipode raises BijectivityError (the theory needs S bijective).
inline Report verify_hopf(HopfAlgebraData& h) {
  require_algebra_shapes(h.algebra);
  require_coalgebra_shapes(h.coalgebra);
  const int d = h.dim();
  if (h.coalgebra.dim != d || h.antipode.rows() != d || h.antipode.cols() != d)
    throw ShapeError("hopf components do not match dim");

  auto inv = inverse(h.antipode);
  if (!inv) throw BijectivityError("antipode matrix is singular");
  h.antipode_inverse = *inv;

  Report rep = verify_algebra(h.algebra);
  rep.absorb(verify_coalgebra(h.coalgebra));

  const BilinearMap& mult = h.algebra.mult;
  const Matrix& comult = h.coalgebra.comult;
  Vec unit_unit = outer_product(h.algebra.unit, h.algebra.unit);

  // Δ and ε are algebra maps
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      rep.check("bialgebra-comult", {i, j}, comult.apply(mult.on_basis(i, j)),
                combine_pair(h.comult_of(i), d, d, h.comult_of(j), d, d, mult, mult));
      Vec eps_prod = h.coalgebra.counit.apply(mult.on_basis(i, j));
      rep.check("bialgebra-counit", {i, j}, eps_prod, {h.counit_of(i) * h.counit_of(j)});
    }
  rep.check("bialgebra-comult-unit", {}, comult.apply(h.algebra.unit), unit_unit);
  rep.check("bialgebra-counit-unit", {}, h.coalgebra.counit.apply(h.algebra.unit), {Rational(1)});

  // m∘(S⊗id)∘Δ = unit∘ε = m∘(id⊗S)∘Δ
  for (int i = 0; i < d; ++i) {
    Vec t = h.comult_of(i);
    Vec target = vec_scale(h.algebra.unit, h.counit_of(i));
    rep.check("antipode-left", {i}, contract_product(apply_factor(h.antipode, t, {d, d}, 0), mult),
              target);
    rep.check("antipode-right", {i}, contract_product(apply_factor(h.antipode, t, {d, d}, 1), mult),
              target);
  }
  return rep;
}

inline bool is_commutative(const HopfAlgebraData& h) { return is_commutative(h.algebra); }
inline bool is_cocommutative(const HopfAlgebraData& h) { return is_cocommutative(h.coalgebra); }

/// S⁻¹ is the antipode of the co-opposite Hopf algebra:
/// m∘(S⁻¹⊗id)∘Δᵒᵖ = unit∘ε = m∘(id⊗S⁻¹)∘Δᵒᵖ.
inline Report verify_antipode_inverse(const HopfAlgebraData& h) {
  Report rep;
  const int d = h.dim();
  Matrix id = Matrix::identity(d);
  for (int i = 0; i < d; ++i) {
    rep.check("antipode-times-inverse", {i}, (h.antipode * h.antipode_inverse).col(i), id.col(i));
    rep.check("inverse-times-antipode", {i}, (h.antipode_inverse * h.antipode).col(i), id.col(i));
  }
  for (int i = 0; i < d; ++i) {
    Vec top = swap_factors(h.comult_of(i), {d, d}, 0, 1);
    Vec target = vec_scale(h.algebra.unit, h.counit_of(i));
    rep.check("coop-antipode-left", {i},
              contract_product(apply_factor(h.antipode_inverse, top, {d, d}, 0), h.algebra.mult),
              target);
    rep.check("coop-antipode-right", {i},
              contract_product(apply_factor(h.antipode_inverse, top, {d, d}, 1), h.algebra.mult),
              target);
  }
  return rep;
}

}  // namespace tphopf
