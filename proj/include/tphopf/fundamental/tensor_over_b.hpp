#pragma once

#include "tphopf/invariants/invariants.hpp"

namespace tphopf {

/// A⊗_B N as a quotient of A⊗N by the relations (a·b)⊗n − a⊗(b·n), with the
/// induced action a'·(a⊗n) = a'a⊗n, Lie action a'⋄(a⊗n) = {a',a}⊗n and
/// coaction a⊗n ↦ a₍₀₎⊗n⊗a₍₁₎.  Every structure map is certified to descend
/// before the quotient module is assembled.
struct TensorOverB {
  int dim_a = 0, dim_n = 0;
  Subspace relations;     // inside the ambient A⊗N
  QuotientMap quotient;   // coordinates on standard-basis representatives
  TPHopfModuleData module;  // induced structure in quotient coordinates
  Report module_report;     // the induced module re-verified end to end

  TensorOverB() : quotient(Subspace::zero(0)) {}

  /// Quotient coordinates of a pure tensor a⊗n.
  Vec reduce_tensor(const Vec& a_elem, const Vec& n_elem) const {
    return quotient.reduce(outer_product(a_elem, n_elem));
  }
};

/// N = B as a module over itself.
inline BModuleData regular_b_module(const SubalgebraData& b) {
  return {b.dim(), b.induced.mult, BilinearMap(b.dim(), b.dim(), b.dim())};
}

/// N = B^rank with the componentwise action.
inline BModuleData free_b_module(const SubalgebraData& b, int rank) {
  const int db = b.dim(), dn = db * rank;
  BModuleData n{dn, BilinearMap(db, dn, dn), BilinearMap(db, dn, dn)};
  for (int r = 0; r < db; ++r)
    for (int c = 0; c < rank; ++c)
      for (int s = 0; s < db; ++s)
        for (int s2 = 0; s2 < db; ++s2) {
          const Rational& coeff = b.induced.mult.at(r, s, s2);
          if (coeff != 0) n.act.at(r, c * db + s, c * db + s2) = coeff;
        }
  return n;
}

inline TensorOverB tensor_over_B(const ComoduleTPAlgebra& a, const BModuleData& n,
                                 const SubalgebraData& b, const HopfAlgebraData& h) {
  const int da = a.dim(), dn = n.dim, dh = h.dim();
  if (n.act.left_dim() != b.dim() || n.act.right_dim() != dn)
    throw ShapeError("B-module action does not match dims");

  // the input must be a transposed Poisson B-module (B carries zero bracket)
  Report n_report = verify_tp_module_data(n.act, n.lie_act, with_zero_bracket(b.induced));
  if (!n_report.pass)
    throw HypothesisError("input is not a transposed Poisson B-module: " +
                          format_witness(n_report.witnesses.front()));

  TensorOverB t;
  t.dim_a = da;
  t.dim_n = dn;

  std::vector<Vec> rel_gens;
  for (int i = 0; i < da; ++i)
    for (int r = 0; r < b.dim(); ++r)
      for (int k = 0; k < dn; ++k) {
        Vec lhs = outer_product(a.algebra().multiply(a.tp.basis(i), b.basis_element(r)), unit_vec(dn, k));
        Vec rhs = outer_product(a.tp.basis(i), n.act.on_basis(r, k));
        rel_gens.push_back(vec_sub(std::move(lhs), rhs));
      }
  t.relations = Subspace::span(da * dn, rel_gens);
  t.quotient = QuotientMap(t.relations);

  // ambient structure maps
  std::vector<Matrix> act_amb, lie_amb;
  for (int j = 0; j < da; ++j) {
    act_amb.push_back(kron(a.algebra().mult.basis_left_matrix(j), Matrix::identity(dn)));
    lie_amb.push_back(kron(a.tp.bracket.basis_left_matrix(j), Matrix::identity(dn)));
  }
  Matrix coact_amb(da * dn * dh, da * dn);
  for (int i = 0; i < da; ++i) {
    Vec rho = a.coact_of(i);
    for (int a0 = 0; a0 < da; ++a0)
      for (int l = 0; l < dh; ++l) {
        const Rational& c = rho[static_cast<size_t>(a0) * dh + static_cast<size_t>(l)];
        if (c == 0) continue;
        for (int k = 0; k < dn; ++k) coact_amb((a0 * dn + k) * dh + l, i * dn + k) = c;
      }
  }

  // every structure map must send the relations into themselves
  for (int r = 0; r < t.relations.dim(); ++r) {
    Vec w = t.relations.basis_vector(r);
    for (int j = 0; j < da; ++j) {
      if (!t.relations.contains(act_amb[static_cast<size_t>(j)].apply(w)))
        throw WellDefinednessError("algebra action by basis " + std::to_string(j) +
                                   " does not preserve relation " + std::to_string(r) +
                                   " (is B inside A^{AcoH}?)");
      if (!t.relations.contains(lie_amb[static_cast<size_t>(j)].apply(w)))
        throw WellDefinednessError("Lie action by basis " + std::to_string(j) +
                                   " does not preserve relation " + std::to_string(r) +
                                   " (is B inside A^{AcoH}?)");
    }
    Vec image = coact_amb.apply(w);
    for (int l = 0; l < dh; ++l) {
      Vec slice(static_cast<size_t>(da * dn));
      for (int u = 0; u < da * dn; ++u)
        slice[static_cast<size_t>(u)] = image[static_cast<size_t>(u) * dh + l];
      if (!t.relations.contains(slice))
        throw WellDefinednessError("coaction does not preserve relation " + std::to_string(r));
    }
  }

  // induced structure on the quotient
  const int c = t.quotient.dim();
  t.module.dim = c;
  t.module.act = BilinearMap(da, c, c);
  t.module.lie_act = BilinearMap(da, c, c);
  t.module.coaction = ComoduleData{c, Matrix(c * dh, c)};
  for (int r = 0; r < c; ++r) {
    Vec rep = t.quotient.representative(r);
    for (int j = 0; j < da; ++j) {
      t.module.act.set_on_basis(j, r, t.quotient.reduce(act_amb[static_cast<size_t>(j)].apply(rep)));
      t.module.lie_act.set_on_basis(j, r, t.quotient.reduce(lie_amb[static_cast<size_t>(j)].apply(rep)));
    }
    Vec image = coact_amb.apply(rep);
    for (int l = 0; l < dh; ++l) {
      Vec slice(static_cast<size_t>(da * dn));
      for (int u = 0; u < da * dn; ++u)
        slice[static_cast<size_t>(u)] = image[static_cast<size_t>(u) * dh + l];
      Vec reduced = t.quotient.reduce(slice);
      for (int u = 0; u < c; ++u) t.module.coaction.coaction(u * dh + l, r) = reduced[static_cast<size_t>(u)];
    }
  }

  t.module_report = verify_tp_hopf_module(t.module, a, h);
  return t;
}

}  // namespace tphopf
