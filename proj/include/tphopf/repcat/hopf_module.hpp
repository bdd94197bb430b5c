#pragma once

#include "tphopf/repcat/comodule_algebra.hpp"

namespace tphopf {

/// Transposed Poisson (A,H)-Hopf module: an A-module (act), a Lie A-module
/// (lie_act) and an H-comodule, subject to the four compatibilities checked
/// below.
struct TPHopfModuleData {
  int dim = 0;
  BilinearMap act;      // A × M → M
  BilinearMap lie_act;  // A × M → M, written a ⋄ m
  ComoduleData coaction;

  Vec basis(int i) const { return unit_vec(dim, i); }
};

inline void require_module_shapes(const TPHopfModuleData& m, const ComoduleTPAlgebra& a) {
  if (m.act.left_dim() != a.dim() || m.act.right_dim() != m.dim || m.act.out_dim() != m.dim ||
      m.lie_act.left_dim() != a.dim() || m.lie_act.right_dim() != m.dim ||
      m.lie_act.out_dim() != m.dim || m.coaction.dim != m.dim)
    throw ShapeError("module tensors do not match dims");
}

/// Unital associative action laws.
inline Report verify_module_laws(const BilinearMap& act, const AlgebraData& a) {
  Report rep;
  const int dm = act.right_dim();
  for (int m = 0; m < dm; ++m)
    rep.check("module-unital", {m}, act.apply(a.unit, unit_vec(dm, m)), unit_vec(dm, m));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int m = 0; m < dm; ++m)
        rep.check("module-associative", {i, j, m}, act.apply(unit_vec(a.dim, i), act.on_basis(j, m)),
                  act.apply(a.mult.on_basis(i, j), unit_vec(dm, m)));
  return rep;
}

/// Lie-module law {a,b}⋄m = a⋄(b⋄m) − b⋄(a⋄m).
inline Report verify_lie_module_law(const BilinearMap& lie, const TPAlgebraData& a) {
  Report rep;
  const int dm = lie.right_dim();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int m = 0; m < dm; ++m) {
        Vec lhs = lie.apply(a.bracket.on_basis(i, j), unit_vec(dm, m));
        Vec rhs = lie.apply(a.basis(i), lie.on_basis(j, m));
        add_scaled(rhs, -1, lie.apply(a.basis(j), lie.on_basis(i, m)));
        rep.check("lie-module", {i, j, m}, std::move(lhs), std::move(rhs));
      }
  return rep;
}

/// Transposed Poisson module laws over any transposed Poisson algebra: both
/// module laws plus 2{a,b}·m = a⋄(b·m) − b⋄(a·m) and 2a·(b⋄m) = ab⋄m + b⋄(a·m).
inline Report verify_tp_module_data(const BilinearMap& act, const BilinearMap& lie,
                                    const TPAlgebraData& a) {
  Report rep = verify_module_laws(act, a.algebra);
  rep.absorb(verify_lie_module_law(lie, a));
  const int d = a.dim(), dm = act.right_dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < dm; ++k) {
        Vec m_k = unit_vec(dm, k);
        Vec lhs = vec_scale(act.apply(a.bracket.on_basis(i, j), m_k), 2);
        Vec rhs = lie.apply(a.basis(i), act.on_basis(j, k));
        add_scaled(rhs, -1, lie.apply(a.basis(j), act.on_basis(i, k)));
        rep.check("tp-module-bracket-action", {i, j, k}, std::move(lhs), std::move(rhs));

        Vec lhs2 = vec_scale(act.apply(a.basis(i), lie.on_basis(j, k)), 2);
        Vec rhs2 = lie.apply(a.algebra.mult.on_basis(i, j), m_k);
        add_scaled(rhs2, 1, lie.apply(a.basis(j), act.on_basis(i, k)));
        rep.check("tp-module-mixed", {i, j, k}, std::move(lhs2), std::move(rhs2));
      }
  return rep;
}

inline Report verify_tp_module(const TPHopfModuleData& m, const ComoduleTPAlgebra& a) {
  require_module_shapes(m, a);
  return verify_tp_module_data(m.act, m.lie_act, a.tp);
}

/// (ab)⋄m = b·(a⋄m) for a ∈ A and b in the transposed Poisson center.
inline Report check_associative_actions(const TPHopfModuleData& m, const ComoduleTPAlgebra& a,
                                        const CenterSubspace& center) {
  Report rep;
  for (int i = 0; i < a.dim(); ++i)
    for (int r = 0; r < center.dim(); ++r) {
      Vec b = center.basis_element(r);
      Vec ab = a.algebra().multiply(a.tp.basis(i), b);
      for (int k = 0; k < m.dim; ++k)
        rep.check("associative-actions", {i, r, k}, m.lie_act.apply(ab, m.basis(k)),
                  m.act.apply(b, m.lie_act.on_basis(i, k)));
    }
  return rep;
}

/// Hopf-module law for the algebra action and its Lie-action analogue
/// (a⋄m)₍₀₎ ⊗ (a⋄m)₍₁₎ = a₍₀₎⋄m₍₀₎ ⊗ a₍₁₎m₍₁₎.
inline Report verify_hopf_compatibilities(const TPHopfModuleData& m, const ComoduleTPAlgebra& a,
                                          const HopfAlgebraData& h) {
  Report rep;
  const int d = a.dim(), dm = m.dim, dh = h.dim();
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < dm; ++k) {
      rep.check("hopf-module-law", {i, k}, m.coaction.coaction.apply(m.act.on_basis(i, k)),
                combine_pair(a.coact_of(i), d, dh, m.coaction.coact_of(k), dm, dh, m.act,
                             h.algebra.mult));
      rep.check("lie-hopf-compatibility", {i, k}, m.coaction.coaction.apply(m.lie_act.on_basis(i, k)),
                combine_pair(a.coact_of(i), d, dh, m.coaction.coact_of(k), dm, dh, m.lie_act,
                             h.algebra.mult));
    }
  return rep;
}

/// The full stack: comodule axioms, transposed Poisson module laws, and both
/// Hopf compatibilities.
inline Report verify_tp_hopf_module(const TPHopfModuleData& m, const ComoduleTPAlgebra& a,
                                    const HopfAlgebraData& h) {
  require_module_shapes(m, a);
  Report rep = verify_comodule(m.coaction, h);
  rep.absorb(verify_tp_module(m, a));
  rep.absorb(verify_hopf_compatibilities(m, a, h));
  return rep;
}

/// Lie-module and comodule part only, with the Lie Hopf compatibility — the
/// structure a module needs before any algebra action is imposed.
inline Report verify_lie_comodule(const TPHopfModuleData& m, const ComoduleTPAlgebra& a,
                                  const HopfAlgebraData& h) {
  Report rep = verify_comodule(m.coaction, h);
  rep.absorb(verify_lie_module_law(m.lie_act, a.tp));
  const int d = a.dim(), dm = m.dim, dh = h.dim();
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < dm; ++k)
      rep.check("lie-hopf-compatibility", {i, k}, m.coaction.coaction.apply(m.lie_act.on_basis(i, k)),
                combine_pair(a.coact_of(i), d, dh, m.coaction.coact_of(k), dm, dh, m.lie_act,
                             h.algebra.mult));
  return rep;
}

/// M = A with action = multiplication, Lie action = bracket, coaction = ρ_A.
inline TPHopfModuleData regular_module(const ComoduleTPAlgebra& a) {
  return {a.dim(), a.algebra().mult, a.tp.bracket, a.comodule};
}

}  // namespace tphopf
