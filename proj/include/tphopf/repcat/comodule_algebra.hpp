#pragma once

#include "tphopf/repcat/comodule.hpp"
#include "tphopf/tpalg/tp_algebra.hpp"

namespace tphopf {

/// Transposed Poisson algebra with a compatible H-coaction: the coaction is
/// an algebra map and the bracket is colinear,
/// ρ({a,a'}) = {a₍₀₎,a'₍₀₎} ⊗ a₍₁₎a'₍₁₎.
struct ComoduleTPAlgebra {
  TPAlgebraData tp;
  ComoduleData comodule;

  int dim() const { return tp.dim(); }
  const AlgebraData& algebra() const { return tp.algebra; }
  Vec coact_of(int i) const { return comodule.coact_of(i); }
};

inline Report verify_comodule_tp_algebra(const ComoduleTPAlgebra& a, const HopfAlgebraData& h) {
  Report rep = verify_tp_algebra(a.tp);
  rep.absorb(verify_comodule(a.comodule, h));
  const int d = a.dim(), dh = h.dim();
  const BilinearMap& mult = a.algebra().mult;
  const BilinearMap& multH = h.algebra.mult;

  rep.check("coaction-unit", {}, a.comodule.coaction.apply(a.algebra().unit),
            outer_product(a.algebra().unit, h.algebra.unit));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      rep.check("coaction-algebra-map", {i, j}, a.comodule.coaction.apply(mult.on_basis(i, j)),
                combine_pair(a.coact_of(i), d, dh, a.coact_of(j), d, dh, mult, multH));
      rep.check("bracket-colinearity", {i, j}, a.comodule.coaction.apply(a.tp.bracket.on_basis(i, j)),
                combine_pair(a.coact_of(i), d, dh, a.coact_of(j), d, dh, a.tp.bracket, multH));
    }
  return rep;
}

/// A over the one-dimensional Hopf algebra, or any A with the trivial
/// coaction a ↦ a⊗1.
inline ComoduleTPAlgebra with_trivial_coaction(const TPAlgebraData& tp, const HopfAlgebraData& h) {
  return {tp, trivial_comodule(tp.dim(), h)};
}

/// H as a comodule transposed Poisson algebra over itself (zero bracket,
/// coaction Δ); requires H commutative.
inline ComoduleTPAlgebra regular_comodule_algebra(const HopfAlgebraData& h) {
  if (!is_commutative(h)) throw HypothesisError("regular comodule algebra needs H commutative");
  return {with_zero_bracket(h.algebra), regular_comodule(h)};
}

}  // namespace tphopf
