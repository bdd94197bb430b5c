#pragma once

#include "tphopf/fundamental/fundamental.hpp"
#include "tphopf/repcat/hom_space.hpp"

namespace tphopf {

/// The adjunction between F = A⊗_B(−) and G = (−)^{AcoH} on concrete
/// instances: ψ(f)(n) = f(1⊗n) with inverse ψ'(g)(a⊗n) = a·g(n), the unit
/// η_N(n) = 1⊗n, the counit ε_M = α, and both triangle identities.
struct AdjunctionResult {
  MapSpace hom_fn_m;   // Hom of transposed Poisson (A,H)-Hopf modules A⊗_B N → M
  MapSpace hom_b_n_g;  // Hom_B(N, M^{AcoH})
  Matrix psi;          // hom_fn_m → hom_b_n_g in coordinates
  Matrix psi_prime;    // the inverse direction
  Matrix eta;          // N → (A⊗_B N)^{AcoH} in invariant coordinates
  Matrix counit;       // α: A⊗_B M^{AcoH} → M
  bool verified = false;   // ψ∘ψ' = id and ψ'∘ψ = id, all images members
  bool triangles = false;  // both triangle identities on these instances
};

namespace detail {

inline ModuleOps b_module_ops(const BModuleData& n) {
  ModuleOps ops;
  ops.dim = n.dim;
  for (int r = 0; r < n.act.left_dim(); ++r) ops.b_act.push_back(n.act.basis_left_matrix(r));
  return ops;
}

}  // namespace detail

inline AdjunctionResult adjunction_psi(const BModuleData& n, const TPHopfModuleData& m,
                                       const ComoduleTPAlgebra& a, const HopfAlgebraData& h,
                                       std::optional<SubalgebraData> b_override = std::nullopt) {
  AdjunctionResult out;
  SubalgebraData b = b_override ? *b_override : algebra_invariants(a, h).b;
  ModuleInvariants m_inv = module_invariants(m, a, h);

  TensorOverB fn = tensor_over_B(a, n, b, h);
  out.hom_fn_m = hom_space(module_ops(fn.module, a.dim()), module_ops(m, a.dim()),
                           {true, true, true}, h.dim());

  BModuleData gm = invariant_b_module(m, m_inv.joint, b);
  out.hom_b_n_g = hom_space(detail::b_module_ops(n), detail::b_module_ops(gm),
                            {false, false, false, true}, h.dim());

  // U: N → A⊗_B N, n ↦ 1⊗n (in quotient coordinates)
  Matrix u(fn.quotient.dim(), n.dim);
  for (int k = 0; k < n.dim; ++k) u.set_col(k, fn.reduce_tensor(a.algebra().unit, unit_vec(n.dim, k)));

  bool ok = true;

  // ψ: f ↦ (n ↦ f(1⊗n)), expressed in M^{AcoH} coordinates
  Matrix psi(out.hom_b_n_g.dim(), out.hom_fn_m.dim());
  for (int s = 0; s < out.hom_fn_m.dim() && ok; ++s) {
    Matrix image_in_m = out.hom_fn_m.basis_map(s) * u;  // dim(M) × dim(N)
    Matrix g(m_inv.joint.dim(), n.dim);
    for (int k = 0; k < n.dim && ok; ++k) {
      auto coords = m_inv.joint.coordinates(image_in_m.col(k));
      if (!coords) ok = false;
      else g.set_col(k, *coords);
    }
    if (!ok) break;
    auto coords = out.hom_b_n_g.coordinates_of(g);
    if (!coords) ok = false;
    else psi.set_col(s, *coords);
  }

  // ψ': g ↦ (a⊗n ↦ a·g(n))
  Matrix psi_prime(out.hom_fn_m.dim(), out.hom_b_n_g.dim());
  for (int s = 0; s < out.hom_b_n_g.dim() && ok; ++s) {
    Matrix g = out.hom_b_n_g.basis_map(s);
    Matrix f_amb(m.dim, a.dim() * n.dim);
    for (int i = 0; i < a.dim(); ++i)
      for (int k = 0; k < n.dim; ++k)
        f_amb.set_col(i * n.dim + k,
                      m.act.apply(a.tp.basis(i), m_inv.joint.from_coordinates(g.col(k))));
    for (int r = 0; r < fn.relations.dim(); ++r)
      if (!is_zero(f_amb.apply(fn.relations.basis_vector(r)))) ok = false;
    if (!ok) break;
    Matrix f(m.dim, fn.quotient.dim());
    for (int r = 0; r < fn.quotient.dim(); ++r)
      f.set_col(r, f_amb.apply(fn.quotient.representative(r)));
    auto coords = out.hom_fn_m.coordinates_of(f);
    if (!coords) ok = false;
    else psi_prime.set_col(s, *coords);
  }

  out.psi = psi;
  out.psi_prime = psi_prime;
  out.verified = ok && psi * psi_prime == Matrix::identity(out.hom_b_n_g.dim()) &&
                 psi_prime * psi == Matrix::identity(out.hom_fn_m.dim());

  // unit η_N: n ↦ 1⊗n must land in (A⊗_B N)^{AcoH}
  ModuleInvariants fn_inv = module_invariants(fn.module, a, h);
  bool eta_ok = true;
  out.eta = Matrix(fn_inv.joint.dim(), n.dim);
  for (int k = 0; k < n.dim; ++k) {
    auto coords = fn_inv.joint.coordinates(u.col(k));
    if (!coords) {
      eta_ok = false;
      break;
    }
    out.eta.set_col(k, *coords);
  }

  // counit ε_M = α on A⊗_B M^{AcoH}
  TensorOverB t_m = tensor_over_B(a, gm, b, h);
  AlphaResult eps = alpha_map(t_m, m, m_inv.joint, a, h);
  out.counit = eps.matrix;

  bool triangles_ok = eta_ok && eps.well_defined.pass;

  // triangle 1: ε_{F(N)} ∘ F(η_N) = id on A⊗_B N
  if (triangles_ok) {
    BModuleData fn_g = invariant_b_module(fn.module, fn_inv.joint, b);
    TensorOverB t2 = tensor_over_B(a, fn_g, b, h);
    AlphaResult eps_fn = alpha_map(t2, fn.module, fn_inv.joint, a, h);
    Matrix f_eta(t2.quotient.dim(), fn.quotient.dim());
    for (int r = 0; r < fn.quotient.dim(); ++r) {
      // representative e_i ⊗ e_k of A⊗N maps to e_i ⊗ η(e_k)
      std::vector<int> idx = TensorShape{{a.dim(), n.dim}}.unflatten(
          static_cast<size_t>(fn.quotient.representative_columns()[static_cast<size_t>(r)]));
      f_eta.set_col(r, t2.reduce_tensor(a.tp.basis(idx[0]), out.eta.col(idx[1])));
    }
    triangles_ok = triangles_ok && (eps_fn.matrix * f_eta == Matrix::identity(fn.quotient.dim()));
  }

  // triangle 2: G(ε_M) ∘ η_{G(M)} = id on M^{AcoH}
  if (triangles_ok) {
    ModuleInvariants tm_inv = module_invariants(t_m.module, a, h);
    Matrix eta_gm(tm_inv.joint.dim(), gm.dim);
    for (int k = 0; k < gm.dim; ++k) {
      auto coords = tm_inv.joint.coordinates(t_m.reduce_tensor(a.algebra().unit, unit_vec(gm.dim, k)));
      if (!coords) {
        triangles_ok = false;
        break;
      }
      eta_gm.set_col(k, *coords);
    }
    if (triangles_ok) {
      Matrix g_eps(gm.dim, tm_inv.joint.dim());
      for (int s = 0; s < tm_inv.joint.dim(); ++s) {
        Vec image = out.counit.apply(tm_inv.joint.basis_vector(s));
        auto coords = m_inv.joint.coordinates(image);
        if (!coords) {
          triangles_ok = false;
          break;
        }
        g_eps.set_col(s, *coords);
      }
      triangles_ok = triangles_ok && (g_eps * eta_gm == Matrix::identity(gm.dim));
    }
  }
  out.triangles = triangles_ok;
  return out;
}

}  // namespace tphopf
