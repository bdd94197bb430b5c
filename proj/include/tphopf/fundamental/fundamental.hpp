#pragma once

#include <optional>

#include "tphopf/fundamental/tensor_over_b.hpp"
#include "tphopf/invariants/splitting.hpp"

namespace tphopf {

/// α: A⊗_B M^{AcoH} → M, a⊗m ↦ a·m, with its three morphism certificates.
struct AlphaResult {
  Matrix matrix;  // dim(M) × dim(A⊗_B M^{AcoH})
  Report well_defined;
  Report morphism;  // A-linear, Lie A-linear, H-colinear
  bool bijective = false;
};

inline AlphaResult alpha_map(const TensorOverB& t, const TPHopfModuleData& m,
                             const Subspace& m_acoh, const ComoduleTPAlgebra& a,
                             const HopfAlgebraData& h) {
  const int da = a.dim(), dn = m_acoh.dim(), dm = m.dim, dh = h.dim();
  Matrix alpha_amb(dm, da * dn);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < dn; ++k)
      alpha_amb.set_col(i * dn + k, m.act.apply(a.tp.basis(i), m_acoh.basis_vector(k)));

  AlphaResult res;
  for (int r = 0; r < t.relations.dim(); ++r)
    res.well_defined.check("alpha-well-defined", {r}, alpha_amb.apply(t.relations.basis_vector(r)),
                           zero_vec(dm));

  const int c = t.quotient.dim();
  res.matrix = Matrix(dm, c);
  for (int r = 0; r < c; ++r) res.matrix.set_col(r, alpha_amb.apply(t.quotient.representative(r)));

  for (int j = 0; j < da; ++j) {
    Matrix a_lhs = res.matrix * t.module.act.basis_left_matrix(j);
    Matrix a_rhs = m.act.basis_left_matrix(j) * res.matrix;
    for (int s = 0; s < c; ++s)
      res.morphism.check("alpha-a-linear", {j, s}, a_lhs.col(s), a_rhs.col(s));
    Matrix l_lhs = res.matrix * t.module.lie_act.basis_left_matrix(j);
    Matrix l_rhs = m.lie_act.basis_left_matrix(j) * res.matrix;
    for (int s = 0; s < c; ++s)
      res.morphism.check("alpha-lie-linear", {j, s}, l_lhs.col(s), l_rhs.col(s));
  }
  Matrix co_lhs = m.coaction.coaction * res.matrix;
  Matrix co_rhs = kron(res.matrix, Matrix::identity(dh)) * t.module.coaction.coaction;
  for (int s = 0; s < c; ++s)
    res.morphism.check("alpha-h-colinear", {s}, co_lhs.col(s), co_rhs.col(s));

  res.bijective = (c == dm) && rank(res.matrix) == dm;
  return res;
}

/// The two sufficiency conditions of the fundamental theorem, checked on all
/// basis triples, plus the coincidence M^{coH} = M^{AcoH} they imply.
struct ConditionsReport {
  Report c31;         // {1,aa'}·p_M(m) = φ(a'₍₁₎)⋄(a·p_M(a'₍₀₎·m)) on M
  Report c32;         // the same identity on the regular module A
  Report conclusion;  // {1,a}·p_M(m) = 0, asserted only when c31 holds
  bool coincidence = false;
};

namespace detail {

inline Report condition_31(const TPHopfModuleData& m, const ComoduleTPAlgebra& a,
                           const ColinearAlgebraMap& phi, const Matrix& p) {
  Report rep;
  const int da = a.dim(), dm = m.dim, dh = phi.map.cols();
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      Vec one_br = a.tp.bracket.apply(a.algebra().unit, a.algebra().mult.on_basis(i, j));
      Vec rho_j = a.coact_of(j);
      for (int k = 0; k < dm; ++k) {
        Vec lhs = m.act.apply(one_br, p.col(k));
        Vec rhs = zero_vec(dm);
        for (int j0 = 0; j0 < da; ++j0)
          for (int j1 = 0; j1 < dh; ++j1) {
            const Rational& c = rho_j[static_cast<size_t>(j0) * dh + static_cast<size_t>(j1)];
            if (c == 0) continue;
            Vec inner = m.act.apply(a.tp.basis(i), p.apply(m.act.apply(a.tp.basis(j0), m.basis(k))));
            add_scaled(rhs, c, m.lie_act.apply(phi.map.col(j1), inner));
          }
        rep.check("condition-3.1", {i, j, k}, std::move(lhs), std::move(rhs));
      }
    }
  return rep;
}

}  // namespace detail

inline ConditionsReport check_conditions(const TPHopfModuleData& m, const ComoduleTPAlgebra& a,
                                         const HopfAlgebraData& h, const ColinearAlgebraMap& phi) {
  detail::require_flag(phi.flags.lands_in_center, "lands_in_center");
  detail::require_flag(phi.flags.colinear, "colinear");
  detail::require_flag(phi.flags.algebra_map, "algebra_map");
  detail::require_flag(phi.flags.unit_preserving, "unit_preserving");

  ConditionsReport out;
  Matrix p_m = projection_matrix(m, phi, h);
  out.c31 = detail::condition_31(m, a, phi, p_m);

  TPHopfModuleData reg = regular_module(a);
  Matrix p_a = projection_matrix(reg, phi, h);
  out.c32 = detail::condition_31(reg, a, phi, p_a);
  for (auto& w : out.c32.witnesses) w.law = "condition-3.2";

  ModuleInvariants inv = module_invariants(m, a, h);
  out.coincidence = (inv.coinv == inv.joint);

  if (out.c31.pass) {
    // the lemma's conclusions: coincidence and {1,a}·p_M(m) = 0
    if (!out.coincidence)
      throw Error("theorem violated: condition (3.1) holds but M^{coH} != M^{AcoH}");
    for (int i = 0; i < a.dim(); ++i) {
      Vec one_i = a.tp.bracket.apply(a.algebra().unit, a.tp.basis(i));
      for (int k = 0; k < m.dim; ++k)
        out.conclusion.check("lemma-conclusion-{1,a}p=0", {i, k}, m.act.apply(one_i, p_m.col(k)),
                             zero_vec(m.dim));
    }
    if (!out.conclusion.pass)
      throw Error("theorem violated: condition (3.1) holds but {1,a}·p_M(m) != 0");
  }
  return out;
}

enum class CertStatus { valid, diagnostic };

/// The full fundamental-theorem certificate.  VALID requires every
/// hypothesis, exact two-sided inverses and all six morphism laws; under
/// failed hypotheses the certificate downgrades to DIAGNOSTIC and keeps the
/// α diagnostics (the conditions are sufficient, not necessary).
struct IsoCertificate {
  CertStatus status = CertStatus::diagnostic;
  std::vector<std::string> failed_hypotheses;

  int dim_m = 0, dim_coinv = 0, dim_lie_inv = 0, dim_joint = 0, dim_b = 0, dim_tensor = 0;
  std::optional<ConditionsReport> conditions;

  AlphaResult alpha;
  std::optional<Matrix> beta;
  std::optional<Matrix> alpha_beta;  // both composite products, kept for audit
  std::optional<Matrix> beta_alpha;
  Report beta_morphism;
  bool alpha_beta_identity = false;
  bool beta_alpha_identity = false;

  bool rank_applicable = false;  // B ≅ ℚ
  bool rank_equality = false;    // dim M = dim M^{AcoH} · dim A
};

inline IsoCertificate beta_and_certify(const TPHopfModuleData& m, const ComoduleTPAlgebra& a,
                                       const HopfAlgebraData& h, const ColinearAlgebraMap& phi,
                                       std::optional<SubalgebraData> b_override = std::nullopt) {
  IsoCertificate cert;
  AlgebraInvariants alg_inv = algebra_invariants(a, h);
  ModuleInvariants mod_inv = module_invariants(m, a, h);
  SubalgebraData b = b_override.value_or(alg_inv.b);

  cert.dim_m = m.dim;
  cert.dim_coinv = mod_inv.coinv.dim();
  cert.dim_lie_inv = mod_inv.lie_inv.dim();
  cert.dim_joint = mod_inv.joint.dim();
  cert.dim_b = b.dim();

  if (!phi.flags.unit_preserving) cert.failed_hypotheses.push_back("phi.unit_preserving");
  if (!phi.flags.colinear) cert.failed_hypotheses.push_back("phi.colinear");
  if (!phi.flags.algebra_map) cert.failed_hypotheses.push_back("phi.algebra_map");
  if (!phi.flags.lands_in_center) cert.failed_hypotheses.push_back("phi.lands_in_center");
  // the theorem is stated for B = A^{AcoH}; a smaller B still yields a valid
  // tensor construction but only diagnostic output
  if (b_override && !(b_override->carrier == alg_inv.b.carrier))
    cert.failed_hypotheses.push_back("B-is-not-AcoH");

  BModuleData n = invariant_b_module(m, mod_inv.joint, b);
  TensorOverB t = tensor_over_B(a, n, b, h);
  cert.dim_tensor = t.quotient.dim();
  cert.alpha = alpha_map(t, m, mod_inv.joint, a, h);

  bool coincidence = (mod_inv.coinv == mod_inv.joint);
  if (cert.failed_hypotheses.empty()) {
    cert.conditions = check_conditions(m, a, h, phi);
    coincidence = cert.conditions->coincidence;
    if (!cert.conditions->c31.pass) cert.failed_hypotheses.push_back("condition-3.1");
    if (!cert.conditions->c32.pass) cert.failed_hypotheses.push_back("condition-3.2");
  }

  // β(m) = Σ φ(m₍₁₎) ⊗_B p_M(m₍₀₎); it lands in A⊗_B M^{AcoH} only when the
  // coinvariants coincide with the joint invariants
  if (coincidence && phi.flags.unit_preserving && phi.flags.colinear) {
    Matrix p = projection_matrix(m, phi, h);
    const int dh = h.dim();
    Matrix beta(t.quotient.dim(), m.dim);
    bool representable = true;
    for (int k = 0; k < m.dim && representable; ++k) {
      Vec rho = m.coaction.coact_of(k);
      Vec out = zero_vec(t.quotient.dim());
      for (int i = 0; i < m.dim && representable; ++i)
        for (int l = 0; l < dh; ++l) {
          const Rational& c = rho[static_cast<size_t>(i) * dh + static_cast<size_t>(l)];
          if (c == 0) continue;
          Vec p_part = p.col(i);
          auto coords = mod_inv.joint.coordinates(p_part);
          if (!coords) {
            representable = false;
            break;
          }
          add_scaled(out, c, t.reduce_tensor(phi.map.col(l), *coords));
        }
      beta.set_col(k, out);
    }
    if (representable) {
      cert.beta = beta;
      cert.alpha_beta = cert.alpha.matrix * beta;
      cert.beta_alpha = beta * cert.alpha.matrix;
      cert.alpha_beta_identity = (*cert.alpha_beta == Matrix::identity(m.dim));
      cert.beta_alpha_identity = (*cert.beta_alpha == Matrix::identity(t.quotient.dim()));

      for (int j = 0; j < a.dim(); ++j) {
        Matrix lhs = beta * m.act.basis_left_matrix(j);
        Matrix rhs = t.module.act.basis_left_matrix(j) * beta;
        for (int s = 0; s < m.dim; ++s)
          cert.beta_morphism.check("beta-a-linear", {j, s}, lhs.col(s), rhs.col(s));
        Matrix l_lhs = beta * m.lie_act.basis_left_matrix(j);
        Matrix l_rhs = t.module.lie_act.basis_left_matrix(j) * beta;
        for (int s = 0; s < m.dim; ++s)
          cert.beta_morphism.check("beta-lie-linear", {j, s}, l_lhs.col(s), l_rhs.col(s));
      }
      Matrix co_lhs = t.module.coaction.coaction * beta;
      Matrix co_rhs = kron(beta, Matrix::identity(h.dim())) * m.coaction.coaction;
      for (int s = 0; s < m.dim; ++s)
        cert.beta_morphism.check("beta-h-colinear", {s}, co_lhs.col(s), co_rhs.col(s));
    }
  }

  cert.rank_applicable = (b.dim() == 1);
  cert.rank_equality = cert.rank_applicable && (cert.dim_m == cert.dim_joint * a.dim());

  bool all_good = cert.failed_hypotheses.empty() && cert.beta.has_value() &&
                  cert.alpha_beta_identity && cert.beta_alpha_identity &&
                  cert.alpha.well_defined.pass && cert.alpha.morphism.pass &&
                  cert.beta_morphism.pass;
  if (cert.failed_hypotheses.empty() && !all_good)
    throw Error("theorem violated: all hypotheses hold but the certificate is not VALID");
  cert.status = all_good ? CertStatus::valid : CertStatus::diagnostic;
  return cert;
}

}  // namespace tphopf
