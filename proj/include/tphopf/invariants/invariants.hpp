#pragma once

#include "tphopf/repcat/hopf_module.hpp"

namespace tphopf {

/// Coinvariants M^{coH} = { m : ρ(m) = m⊗1 }, the kernel of ρ − (−)⊗1.
inline Subspace coinvariants(const ComoduleData& m, const HopfAlgebraData& h) {
  require_comodule_shapes(m, h);
  const int dm = m.dim, dh = h.dim();
  Matrix k = m.coaction;
  for (int j = 0; j < dm; ++j)
    for (int l = 0; l < dh; ++l) k(j * dh + l, j) -= h.algebra.unit[static_cast<size_t>(l)];
  return Subspace::kernel_of(k);
}

/// Lie A-invariants M^A = { m : {a,a'}·m = a⋄(a'·m) for all a, a' }, solved
/// as one stacked linear system over all basis pairs.
inline Subspace lie_invariants(const TPHopfModuleData& m, const ComoduleTPAlgebra& a) {
  require_module_shapes(m, a);
  const int d = a.dim();
  Matrix stacked(0, m.dim);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix cond = m.act.left_matrix(a.tp.bracket.on_basis(i, j)) -
                    m.lie_act.basis_left_matrix(i) * m.act.basis_left_matrix(j);
      stacked = vstack(stacked, cond);
    }
  return Subspace::kernel_of(stacked);
}

/// ρ(V) ⊆ V⊗H, checked on every basis vector by slicing the coaction along H.
inline Report certify_subcomodule(const Subspace& v, const Matrix& coaction, int dim_h) {
  Report rep;
  const int dm = v.ambient_dim();
  for (int r = 0; r < v.dim(); ++r) {
    Vec image = coaction.apply(v.basis_vector(r));
    for (int l = 0; l < dim_h; ++l) {
      Vec slice(static_cast<size_t>(dm));
      for (int i = 0; i < dm; ++i) slice[static_cast<size_t>(i)] = image[static_cast<size_t>(i) * dim_h + l];
      if (!v.contains(slice)) rep.fail("subcomodule-stability", {r, l}, slice, zero_vec(dm));
    }
  }
  return rep;
}

/// Invariants of a module, with the lemma-level certificates: M^A is an
/// H-subcomodule, and the center's Lie action annihilates M^A.
struct ModuleInvariants {
  Subspace coinv;    // M^{coH}
  Subspace lie_inv;  // M^A
  Subspace joint;    // M^{AcoH}
  Report certificates;
};

inline ModuleInvariants module_invariants(const TPHopfModuleData& m, const ComoduleTPAlgebra& a,
                                          const HopfAlgebraData& h) {
  ModuleInvariants inv;
  inv.coinv = coinvariants(m.coaction, h);
  inv.lie_inv = lie_invariants(m, a);
  inv.joint = inv.lie_inv.intersect(inv.coinv);
  inv.certificates = certify_subcomodule(inv.lie_inv, m.coaction.coaction, h.dim());

  CenterSubspace center = tp_center(a.tp);
  for (int r = 0; r < center.dim(); ++r)
    for (int k = 0; k < inv.lie_inv.dim(); ++k) {
      Vec image = m.lie_act.apply(center.basis_element(r), inv.lie_inv.basis_vector(k));
      if (!is_zero(image))
        inv.certificates.fail("center-annihilates-invariants", {r, k}, image, zero_vec(m.dim));
    }
  return inv;
}

/// Invariants of A itself: the transposed Poisson center A^A, the
/// coinvariants A^{coH} (certified closed under product and bracket), and
/// B = A^{AcoH} with its induced product table.
struct AlgebraInvariants {
  CenterSubspace center;  // A^A
  Subspace coinv;         // A^{coH}
  SubalgebraData b;       // A^{AcoH}
  Report certificates;
};

inline AlgebraInvariants algebra_invariants(const ComoduleTPAlgebra& a, const HopfAlgebraData& h) {
  AlgebraInvariants inv;
  inv.center = tp_center(a.tp);
  inv.coinv = coinvariants(a.comodule, h);

  for (int r = 0; r < inv.coinv.dim(); ++r)
    for (int s = 0; s < inv.coinv.dim(); ++s) {
      Vec u = inv.coinv.basis_vector(r), v = inv.coinv.basis_vector(s);
      Vec prod = a.algebra().multiply(u, v);
      if (!inv.coinv.contains(prod))
        inv.certificates.fail("coinvariants-product-closed", {r, s}, prod, zero_vec(a.dim()));
      Vec br = a.tp.bracket.apply(u, v);
      if (!inv.coinv.contains(br))
        inv.certificates.fail("coinvariants-bracket-closed", {r, s}, br, zero_vec(a.dim()));
    }
  inv.certificates.absorb(certify_subcomodule(inv.center.carrier, a.comodule.coaction, h.dim()));

  inv.b = induced_subalgebra(inv.center.carrier.intersect(inv.coinv), a.algebra());
  return inv;
}

/// Restriction of the module structure to M^{AcoH} as a module over
/// B = A^{AcoH}: the algebra action stays (closure is a lemma, verified
/// here), the Lie action of B vanishes on it (also verified).
struct BModuleData {
  int dim = 0;
  BilinearMap act;      // B × N → N in B- and N-coordinates
  BilinearMap lie_act;  // usually zero
};

inline BModuleData invariant_b_module(const TPHopfModuleData& m, const Subspace& m_acoh,
                                      const SubalgebraData& b) {
  BModuleData n{m_acoh.dim(), BilinearMap(b.dim(), m_acoh.dim(), m_acoh.dim()),
                BilinearMap(b.dim(), m_acoh.dim(), m_acoh.dim())};
  for (int r = 0; r < b.dim(); ++r)
    for (int k = 0; k < m_acoh.dim(); ++k) {
      Vec image = m.act.apply(b.basis_element(r), m_acoh.basis_vector(k));
      auto coords = m_acoh.coordinates(image);
      if (!coords) throw Error("M^{AcoH} is not closed under the action of B");
      n.act.set_on_basis(r, k, *coords);
      if (!is_zero(m.lie_act.apply(b.basis_element(r), m_acoh.basis_vector(k))))
        throw Error("the Lie action of B does not vanish on M^{AcoH}");
    }
  return n;
}

}  // namespace tphopf
