#pragma once

#include "tphopf/invariants/colinear_map.hpp"
#include "tphopf/repcat/induced.hpp"

namespace tphopf {

namespace detail {
inline void require_flag(bool flag, const char* name) {
  if (!flag) throw HypothesisError(std::string("phi flag not satisfied: ") + name);
}
}  // namespace detail

/// p_M(m) = φ(S⁻¹(m₍₁₎))·m₍₀₎.  Needs φ unit-preserving and colinear; the
/// returned report certifies P² = P and Im P = M^{coH}.
struct ProjectionResult {
  Matrix matrix;
  Report report;
};

inline Matrix projection_matrix(const TPHopfModuleData& m, const ColinearAlgebraMap& phi,
                                const HopfAlgebraData& h) {
  detail::require_flag(phi.flags.unit_preserving, "unit_preserving");
  detail::require_flag(phi.flags.colinear, "colinear");
  const int dm = m.dim, dh = h.dim();
  Matrix phi_sinv = phi.map * h.antipode_inverse;  // column l = φ(S⁻¹(e_l))
  Matrix p(dm, dm);
  for (int j = 0; j < dm; ++j) {
    Vec rho = m.coaction.coact_of(j);
    Vec out = zero_vec(dm);
    for (int i = 0; i < dm; ++i)
      for (int l = 0; l < dh; ++l) {
        const Rational& c = rho[static_cast<size_t>(i) * dh + static_cast<size_t>(l)];
        if (c != 0) add_scaled(out, c, m.act.apply(phi_sinv.col(l), m.basis(i)));
      }
    p.set_col(j, out);
  }
  return p;
}

inline ProjectionResult projection_p(const TPHopfModuleData& m, const ColinearAlgebraMap& phi,
                                     const HopfAlgebraData& h) {
  ProjectionResult res;
  res.matrix = projection_matrix(m, phi, h);
  const Matrix& p = res.matrix;
  for (int j = 0; j < m.dim; ++j)
    res.report.check("projection-idempotent", {j}, (p * p).col(j), p.col(j));
  Subspace image = Subspace::column_space(p);
  Subspace coinv = coinvariants(m.coaction, h);
  if (!(image == coinv))
    res.report.fail("projection-image-is-coinvariants", {},
                    {Rational(image.dim())}, {Rational(coinv.dim())});
  return res;
}

/// The splitting λ: M⊗H → M, λ(m⊗h) = φ(h·S⁻¹(m₍₁₎))·m₍₀₎, a retraction of
/// ρ_M.  Hypotheses: φ lands in the center, is unit-preserving and colinear,
/// the two actions are associative, and H is commutative or φ is an algebra
/// map.  The report certifies λ∘ρ = id, H-colinearity and Lie A-linearity
/// (plus A-linearity when H is commutative).
struct LambdaResult {
  Matrix lambda;  // dim(M) × (dim(M)·dim(H))
  Report report;
};

inline LambdaResult lambda_map(const TPHopfModuleData& m, const ColinearAlgebraMap& phi,
                               const ComoduleTPAlgebra& a, const HopfAlgebraData& h) {
  detail::require_flag(phi.flags.lands_in_center, "lands_in_center");
  detail::require_flag(phi.flags.unit_preserving, "unit_preserving");
  detail::require_flag(phi.flags.colinear, "colinear");
  const bool h_comm = is_commutative(h);
  if (!h_comm && !phi.flags.algebra_map)
    throw HypothesisError("lambda needs H commutative or phi an algebra map");
  CenterSubspace center = tp_center(a.tp);
  if (!check_associative_actions(m, a, center).pass)
    throw HypothesisError("lambda needs associative Lie and algebra actions");

  const int dm = m.dim, dh = h.dim();
  Matrix lambda(dm, dm * dh);
  for (int j = 0; j < dm; ++j) {
    Vec rho = m.coaction.coact_of(j);
    for (int k = 0; k < dh; ++k) {
      Vec out = zero_vec(dm);
      for (int i = 0; i < dm; ++i)
        for (int l = 0; l < dh; ++l) {
          const Rational& c = rho[static_cast<size_t>(i) * dh + static_cast<size_t>(l)];
          if (c == 0) continue;
          Vec arg = h.algebra.multiply(unit_vec(dh, k), h.antipode_inverse.col(l));
          add_scaled(out, c, m.act.apply(phi.map.apply(arg), m.basis(i)));
        }
      lambda.set_col(j * dh + k, out);
    }
  }

  LambdaResult res{lambda, {}};
  // λ∘ρ_M = id_M
  Matrix composite = lambda * m.coaction.coaction;
  for (int j = 0; j < dm; ++j)
    res.report.check("lambda-splits-coaction", {j}, composite.col(j), Matrix::identity(dm).col(j));

  // H-colinearity for the coaction m⊗h ↦ m⊗h₁⊗h₂ on the source
  Matrix rho_tensor = kron(Matrix::identity(dm), h.coalgebra.comult);
  Matrix lhs = m.coaction.coaction * lambda;
  Matrix rhs = kron(lambda, Matrix::identity(dh)) * rho_tensor;
  for (int c = 0; c < lhs.cols(); ++c)
    res.report.check("lambda-h-colinear", {c}, lhs.col(c), rhs.col(c));

  // Lie A-linearity for the twisted module structure on M⊗H
  TPHopfModuleData twisted = induce_tensor_H(LieModuleData{dm, m.lie_act}, a, h);
  for (int i = 0; i < a.dim(); ++i) {
    Matrix left = lambda * twisted.lie_act.basis_left_matrix(i);
    Matrix right = m.lie_act.basis_left_matrix(i) * lambda;
    for (int c = 0; c < left.cols(); ++c)
      res.report.check("lambda-lie-linear", {i, c}, left.col(c), right.col(c));
  }

  if (h_comm) {
    TPHopfModuleData full = induce_tensor_H(TPModuleData{dm, m.act, m.lie_act}, a, h);
    for (int i = 0; i < a.dim(); ++i) {
      Matrix left = lambda * full.act.basis_left_matrix(i);
      Matrix right = m.act.basis_left_matrix(i) * lambda;
      for (int c = 0; c < left.cols(); ++c)
        res.report.check("lambda-a-linear", {i, c}, left.col(c), right.col(c));
    }
  }
  return res;
}

}  // namespace tphopf
