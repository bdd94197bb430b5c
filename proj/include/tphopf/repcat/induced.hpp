#pragma once

#include "tphopf/repcat/hopf_module.hpp"

namespace tphopf {

/// A Lie A-module: just the ⋄ action.
struct LieModuleData {
  int dim = 0;
  BilinearMap lie_act;
};

/// A transposed Poisson A-module: algebra action and Lie action, no coaction.
struct TPModuleData {
  int dim = 0;
  BilinearMap act;
  BilinearMap lie_act;
};

namespace detail {

inline BilinearMap induce_action(const BilinearMap& base, const ComoduleTPAlgebra& a,
                                 const HopfAlgebraData& h, int dn) {
  const int d = a.dim(), dh = h.dim(), dm = dn * dh;
  BilinearMap out(d, dm, dm);
  for (int i = 0; i < d; ++i) {
    Vec rho = a.coact_of(i);  // Σ a₍₀₎ ⊗ a₍₁₎
    for (int a0 = 0; a0 < d; ++a0)
      for (int a1 = 0; a1 < dh; ++a1) {
        const Rational& c = rho[static_cast<size_t>(a0) * dh + static_cast<size_t>(a1)];
        if (c == 0) continue;
        for (int k = 0; k < dn; ++k)
          for (int l = 0; l < dh; ++l) {
            // c · (base(a₍₀₎, n) ⊗ a₍₁₎·h)
            for (int k2 = 0; k2 < dn; ++k2) {
              const Rational& cb = base.at(a0, k, k2);
              if (cb == 0) continue;
              for (int l2 = 0; l2 < dh; ++l2) {
                const Rational& cm = h.algebra.mult.at(a1, l, l2);
                if (cm != 0) out.at(i, k * dh + l, k2 * dh + l2) += c * cb * cm;
              }
            }
          }
      }
  }
  return out;
}

inline ComoduleData induce_coaction(int dn, const HopfAlgebraData& h) {
  const int dh = h.dim(), dm = dn * dh;
  ComoduleData co{dm, Matrix(dm * dh, dm)};
  for (int k = 0; k < dn; ++k)
    for (int l = 0; l < dh; ++l) {
      // (n⊗h) ↦ n ⊗ h₁ ⊗ h₂
      Vec dl = h.comult_of(l);
      for (int l1 = 0; l1 < dh; ++l1)
        for (int l2 = 0; l2 < dh; ++l2) {
          const Rational& c = dl[static_cast<size_t>(l1) * dh + static_cast<size_t>(l2)];
          if (c != 0) co.coaction((k * dh + l1) * dh + l2, k * dh + l) = c;
        }
    }
  return co;
}

}  // namespace detail

/// N⊗H for a Lie A-module N: Lie action a⋄(n⊗h) = a₍₀₎⋄n ⊗ a₍₁₎h, coaction
/// n⊗h ↦ n⊗h₁⊗h₂.  No algebra action is produced at this level; the act
/// tensor is left zero.
inline TPHopfModuleData induce_tensor_H(const LieModuleData& n, const ComoduleTPAlgebra& a,
                                        const HopfAlgebraData& h) {
  Report pre = verify_lie_module_law(n.lie_act, a.tp);
  if (!pre.pass)
    throw HypothesisError("N is not a Lie A-module: " + format_witness(pre.witnesses.front()));
  const int dm = n.dim * h.dim();
  TPHopfModuleData m;
  m.dim = dm;
  m.act = BilinearMap(a.dim(), dm, dm);
  m.lie_act = detail::induce_action(n.lie_act, a, h, n.dim);
  m.coaction = detail::induce_coaction(n.dim, h);
  return m;
}

/// N⊗H for a transposed Poisson A-module N, with the algebra action
/// a·(n⊗h) = a₍₀₎·n ⊗ a₍₁₎h on top of the Lie level.  Only available for
/// commutative H; the output is re-verified as a full Hopf module before it
/// is returned.
inline TPHopfModuleData induce_tensor_H(const TPModuleData& n, const ComoduleTPAlgebra& a,
                                        const HopfAlgebraData& h) {
  if (!is_commutative(h))
    throw HypothesisError("the induced algebra action on N⊗H needs H commutative");
  Report pre = verify_tp_module_data(n.act, n.lie_act, a.tp);
  if (!pre.pass)
    throw HypothesisError("N is not a transposed Poisson A-module: " +
                          format_witness(pre.witnesses.front()));
  TPHopfModuleData m = induce_tensor_H(LieModuleData{n.dim, n.lie_act}, a, h);
  m.act = detail::induce_action(n.act, a, h, n.dim);
  Report post = verify_tp_hopf_module(m, a, h);
  if (!post.pass)
    throw Error("induced module failed verification: " + format_witness(post.witnesses.front()));
  return m;
}

/// A itself as a transposed Poisson A-module (multiplication and bracket).
inline TPModuleData regular_tp_module(const ComoduleTPAlgebra& a) {
  return {a.dim(), a.algebra().mult, a.tp.bracket};
}

/// The one-dimensional module with both actions through a character, or zero
/// Lie action and unit-scaled algebra action when no character is given.
inline TPModuleData trivial_tp_module(const ComoduleTPAlgebra& a, const Matrix& character) {
  // character: 1×dim(A) algebra map A → ℚ
  TPModuleData n{1, BilinearMap(a.dim(), 1, 1), BilinearMap(a.dim(), 1, 1)};
  for (int i = 0; i < a.dim(); ++i) n.act.at(i, 0, 0) = character(0, i);
  return n;
}

}  // namespace tphopf
