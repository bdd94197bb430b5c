#pragma once

#include <optional>

#include "tphopf/repcat/induced.hpp"

namespace tphopf {

/// Per-basis structure matrices of one module, the common currency of the
/// intertwiner solver.  Absent structures stay empty.
struct ModuleOps {
  int dim = 0;
  std::vector<Matrix> act;    // act[i] = matrix of e_i·(−)
  std::vector<Matrix> lie;    // lie[i] = matrix of e_i⋄(−)
  std::vector<Matrix> b_act;  // B-action matrices, for Hom_B spaces
  Matrix coaction;            // (dim·dimH)×dim, or 0×0
};

inline ModuleOps module_ops(const TPHopfModuleData& m, int algebra_dim) {
  ModuleOps ops;
  ops.dim = m.dim;
  for (int i = 0; i < algebra_dim; ++i) {
    ops.act.push_back(m.act.basis_left_matrix(i));
    ops.lie.push_back(m.lie_act.basis_left_matrix(i));
  }
  ops.coaction = m.coaction.coaction;
  return ops;
}

inline ModuleOps module_ops(const TPModuleData& m, int algebra_dim) {
  ModuleOps ops;
  ops.dim = m.dim;
  for (int i = 0; i < algebra_dim; ++i) {
    ops.act.push_back(m.act.basis_left_matrix(i));
    ops.lie.push_back(m.lie_act.basis_left_matrix(i));
  }
  return ops;
}

inline ModuleOps module_ops(const LieModuleData& m, int algebra_dim) {
  ModuleOps ops;
  ops.dim = m.dim;
  for (int i = 0; i < algebra_dim; ++i) ops.lie.push_back(m.lie_act.basis_left_matrix(i));
  return ops;
}

struct HomFlags {
  bool a_linear = false;
  bool lie_linear = false;
  bool h_colinear = false;
  bool b_linear = false;
};

/// The solution space of the flagged intertwining laws inside the matrix
/// space Hom(src, tgt), maps flattened row-major (tgt index slow).
struct MapSpace {
  int src_dim = 0, tgt_dim = 0;
  HomFlags flags;
  Subspace solution;

  int dim() const { return solution.dim(); }

  Matrix basis_map(int k) const {
    Matrix f(tgt_dim, src_dim);
    Vec v = solution.basis_vector(k);
    for (int t = 0; t < tgt_dim; ++t)
      for (int s = 0; s < src_dim; ++s) f(t, s) = v[static_cast<size_t>(t) * src_dim + s];
    return f;
  }

  std::optional<Vec> coordinates_of(const Matrix& f) const {
    if (f.rows() != tgt_dim || f.cols() != src_dim) throw ShapeError("map shape mismatch");
    Vec v(static_cast<size_t>(tgt_dim) * src_dim);
    for (int t = 0; t < tgt_dim; ++t)
      for (int s = 0; s < src_dim; ++s) v[static_cast<size_t>(t) * src_dim + s] = f(t, s);
    return solution.coordinates(v);
  }

  Matrix from_coordinates(const Vec& coords) const {
    Vec v = solution.from_coordinates(coords);
    Matrix f(tgt_dim, src_dim);
    for (int t = 0; t < tgt_dim; ++t)
      for (int s = 0; s < src_dim; ++s) f(t, s) = v[static_cast<size_t>(t) * src_dim + s];
    return f;
  }
};

namespace detail {

// rows for P·F = F·Q, unknown F (dT×dS) flattened row-major
inline void intertwiner_rows(Matrix& rows, const Matrix& p, const Matrix& q, int dt, int ds) {
  Matrix block(dt * ds, dt * ds);
  for (int t = 0; t < dt; ++t)
    for (int s = 0; s < ds; ++s) {
      int r = t * ds + s;
      for (int u = 0; u < dt; ++u)
        if (p(t, u) != 0) block(r, u * ds + s) += p(t, u);
      for (int u = 0; u < ds; ++u)
        if (q(u, s) != 0) block(r, t * ds + u) -= q(u, s);
    }
  rows = vstack(rows, block);
}

// rows for ρ_T·F = (F⊗id_H)·ρ_S
inline void colinearity_rows(Matrix& rows, const Matrix& rho_t, const Matrix& rho_s, int dt, int ds,
                             int dh) {
  Matrix block(dt * dh * ds, dt * ds);
  for (int t = 0; t < dt; ++t)
    for (int l = 0; l < dh; ++l)
      for (int s = 0; s < ds; ++s) {
        int r = (t * dh + l) * ds + s;
        for (int u = 0; u < dt; ++u)
          if (rho_t(t * dh + l, u) != 0) block(r, u * ds + s) += rho_t(t * dh + l, u);
        for (int u = 0; u < ds; ++u)
          if (rho_s(u * dh + l, s) != 0) block(r, t * ds + u) -= rho_s(u * dh + l, s);
      }
  rows = vstack(rows, block);
}

}  // namespace detail

/// Computes the hom space as a kernel in the matrix space: one block of
/// linear equations per flagged law per algebra basis element.
inline MapSpace hom_space(const ModuleOps& src, const ModuleOps& tgt, HomFlags flags, int dim_h) {
  const int ds = src.dim, dt = tgt.dim;
  Matrix rows(0, dt * ds);
  if (flags.a_linear) {
    if (src.act.size() != tgt.act.size()) throw ShapeError("action list mismatch");
    for (size_t i = 0; i < src.act.size(); ++i)
      detail::intertwiner_rows(rows, tgt.act[i], src.act[i], dt, ds);
  }
  if (flags.lie_linear) {
    if (src.lie.size() != tgt.lie.size()) throw ShapeError("lie action list mismatch");
    for (size_t i = 0; i < src.lie.size(); ++i)
      detail::intertwiner_rows(rows, tgt.lie[i], src.lie[i], dt, ds);
  }
  if (flags.h_colinear) {
    if (src.coaction.rows() != ds * dim_h || tgt.coaction.rows() != dt * dim_h)
      throw ShapeError("colinearity needs coactions on both sides");
    detail::colinearity_rows(rows, tgt.coaction, src.coaction, dt, ds, dim_h);
  }
  if (flags.b_linear) {
    if (src.b_act.size() != tgt.b_act.size()) throw ShapeError("B-action list mismatch");
    for (size_t i = 0; i < src.b_act.size(); ++i)
      detail::intertwiner_rows(rows, tgt.b_act[i], src.b_act[i], dt, ds);
  }
  return {ds, dt, flags, Subspace::kernel_of(rows)};
}

enum class HomCategory {
  lie_comodule,  // Lie A-linear (+ H-colinear on the twisted side)
  poisson_hopf,  // additionally A-linear on both sides
};

/// γ: Hom(M, N⊗H) → Hom(M, N), f ↦ (id⊗ε)∘f, with inverse
/// γ'(g) = (g⊗id)∘ρ_M, realized in coordinates on the two computed hom
/// spaces.  verified demands exact two-sided inverse and membership of all
/// images.
struct GammaResult {
  MapSpace hom_twisted;  // maps M → N⊗H in the flagged category
  MapSpace hom_plain;    // maps M → N
  Matrix gamma;          // hom_twisted → hom_plain in basis coordinates
  Matrix gamma_prime;    // hom_plain → hom_twisted
  bool verified = false;
};

namespace detail {
inline GammaResult gamma_between(const ModuleOps& m_ops, const ModuleOps& induced_ops,
                                 const ModuleOps& n_ops, HomFlags twisted, HomFlags plain,
                                 const HopfAlgebraData& h) {
  GammaResult out;
  out.hom_twisted = hom_space(m_ops, induced_ops, twisted, h.dim());
  out.hom_plain = hom_space(m_ops, n_ops, plain, h.dim());

  const int dn = n_ops.dim, dh = h.dim();
  // (id_N ⊗ ε): N⊗H → N
  Matrix eps_leg(dn, dn * dh);
  for (int k = 0; k < dn; ++k)
    for (int l = 0; l < dh; ++l) eps_leg(k, k * dh + l) = h.counit_of(l);

  bool member_ok = true;
  Matrix gamma(out.hom_plain.dim(), out.hom_twisted.dim());
  for (int s = 0; s < out.hom_twisted.dim(); ++s) {
    auto coords = out.hom_plain.coordinates_of(eps_leg * out.hom_twisted.basis_map(s));
    if (!coords) {
      member_ok = false;
      break;
    }
    gamma.set_col(s, *coords);
  }
  Matrix gamma_prime(out.hom_twisted.dim(), out.hom_plain.dim());
  if (member_ok)
    for (int t = 0; t < out.hom_plain.dim(); ++t) {
      Matrix g = out.hom_plain.basis_map(t);
      auto coords = out.hom_twisted.coordinates_of(kron(g, Matrix::identity(dh)) * m_ops.coaction);
      if (!coords) {
        member_ok = false;
        break;
      }
      gamma_prime.set_col(t, *coords);
    }

  out.gamma = gamma;
  out.gamma_prime = gamma_prime;
  out.verified = member_ok && out.hom_twisted.dim() == out.hom_plain.dim() &&
                 gamma * gamma_prime == Matrix::identity(out.hom_plain.dim()) &&
                 gamma_prime * gamma == Matrix::identity(out.hom_twisted.dim());
  return out;
}
}  // namespace detail

/// The Lie-comodule version: N a Lie A-module, hom spaces of Lie A-linear
/// (and H-colinear) maps.
inline GammaResult gamma_iso(const TPHopfModuleData& m, const LieModuleData& n,
                             const ComoduleTPAlgebra& a, const HopfAlgebraData& h) {
  TPHopfModuleData induced = induce_tensor_H(n, a, h);
  return detail::gamma_between(module_ops(m, a.dim()), module_ops(induced, a.dim()),
                               module_ops(n, a.dim()), {false, true, true}, {false, true, false}, h);
}

/// The transposed Poisson version (H commutative): hom spaces of A-linear,
/// Lie A-linear (and H-colinear) maps.
inline GammaResult gamma_iso(const TPHopfModuleData& m, const TPModuleData& n,
                             const ComoduleTPAlgebra& a, const HopfAlgebraData& h) {
  TPHopfModuleData induced = induce_tensor_H(n, a, h);
  return detail::gamma_between(module_ops(m, a.dim()), module_ops(induced, a.dim()),
                               module_ops(n, a.dim()), {true, true, true}, {true, true, false}, h);
}

}  // namespace tphopf
