#pragma once

#include <utility>

#include "tphopf/exactlin/subspace.hpp"
#include "tphopf/hopfcore/algebra.hpp"

namespace tphopf {

/// Commutative algebra plus a Lie bracket subject to the transposed Leibniz
/// identity 2a{b,c} = {ab,c} + {b,ac}.
struct TPAlgebraData {
  AlgebraData algebra;
  BilinearMap bracket;  // {,}: A × A → A

  int dim() const { return algebra.dim; }
  Vec basis(int i) const { return algebra.basis(i); }
};

/// A subspace of an algebra carrying its own induced multiplication table.
/// Basis names of the induced algebra are the printed ambient elements.
struct SubalgebraData {
  Subspace carrier;
  AlgebraData induced;

  int dim() const { return carrier.dim(); }
  Vec embed(const Vec& coords) const { return carrier.from_coordinates(coords); }
  Vec basis_element(int r) const { return carrier.basis_vector(r); }
};

using CenterSubspace = SubalgebraData;

/// Builds the induced product table on a subspace; the subspace must be
/// closed under the ambient product and contain the unit.
inline SubalgebraData induced_subalgebra(const Subspace& carrier, const AlgebraData& ambient) {
  SubalgebraData sub;
  sub.carrier = carrier;
  sub.induced.dim = carrier.dim();
  sub.induced.mult = BilinearMap(carrier.dim(), carrier.dim(), carrier.dim());
  sub.induced.commutative_claimed = ambient.commutative_claimed;
  for (int r = 0; r < carrier.dim(); ++r)
    sub.induced.basis_names.push_back(format_element(carrier.basis_vector(r), ambient.basis_names));
  for (int r = 0; r < carrier.dim(); ++r)
    for (int s = 0; s < carrier.dim(); ++s) {
      Vec prod = ambient.multiply(carrier.basis_vector(r), carrier.basis_vector(s));
      auto coords = carrier.coordinates(prod);
      if (!coords) throw Error("subspace is not closed under the product");
      sub.induced.mult.set_on_basis(r, s, *coords);
    }
  auto unit_coords = carrier.coordinates(ambient.unit);
  if (!unit_coords) throw Error("subspace does not contain the unit");
  sub.induced.unit = *unit_coords;
  return sub;
}

/// All three bracket axioms on basis triples: antisymmetry, Jacobi, and the
/// transposed Leibniz identity.  The underlying algebra is re-verified
/// (commutativity included) and its failures absorbed.
inline Report verify_tp_algebra(const TPAlgebraData& a) {
  require_algebra_shapes(a.algebra);
  const int d = a.dim();
  if (a.bracket.left_dim() != d || a.bracket.right_dim() != d || a.bracket.out_dim() != d)
    throw ShapeError("bracket tensor does not match dim");

  Report rep = verify_algebra(a.algebra);
  rep.absorb(commutativity_report(a.algebra));

  const BilinearMap& br = a.bracket;
  const BilinearMap& mult = a.algebra.mult;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      rep.check("antisymmetry", {i, j}, br.on_basis(i, j), vec_scale(br.on_basis(j, i), -1));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec jac = br.apply(a.basis(i), br.on_basis(j, k));
        add_scaled(jac, 1, br.apply(a.basis(j), br.on_basis(k, i)));
        add_scaled(jac, 1, br.apply(a.basis(k), br.on_basis(i, j)));
        rep.check("jacobi", {i, j, k}, jac, zero_vec(d));
        // 2a{b,c} = {ab,c} + {b,ac}
        Vec lhs = vec_scale(mult.apply(a.basis(i), br.on_basis(j, k)), 2);
        Vec rhs = br.apply(mult.on_basis(i, j), a.basis(k));
        add_scaled(rhs, 1, br.apply(a.basis(j), mult.on_basis(i, k)));
        rep.check("transposed-leibniz", {i, j, k}, std::move(lhs), std::move(rhs));
      }
  return rep;
}

/// The transposed Poisson center: all b with b{a,a'} = {ba,a'}, computed as
/// one stacked linear system over all basis pairs.  The result carries the
/// induced product table; on it the bracket vanishes identically (checked).
inline CenterSubspace tp_center(const TPAlgebraData& a) {
  const int d = a.dim();
  Matrix stacked(0, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix cond(d, d);
      Vec bij = a.bracket.on_basis(i, j);
      for (int k = 0; k < d; ++k) {
        Vec lhs = a.algebra.multiply(a.basis(k), bij);
        Vec rhs = a.bracket.apply(a.algebra.mult.on_basis(k, i), a.basis(j));
        cond.set_col(k, vec_sub(std::move(lhs), rhs));
      }
      stacked = vstack(stacked, cond);
    }
  Subspace carrier = Subspace::kernel_of(stacked);
  CenterSubspace center = induced_subalgebra(carrier, a.algebra);
  for (int r = 0; r < carrier.dim(); ++r)
    for (int s = 0; s < carrier.dim(); ++s)
      if (!is_zero(a.bracket.apply(carrier.basis_vector(r), carrier.basis_vector(s))))
        throw Error("bracket does not vanish on the computed center");
  return center;
}

/// Bracket {a,b} = a·D(b) - D(a)·b from a derivation D.  D is checked against
/// the Leibniz law first; the result is certified by verify_tp_algebra.
inline TPAlgebraData derivation_bracket(const AlgebraData& a, const Matrix& d) {
  require_algebra_shapes(a);
  if (d.rows() != a.dim || d.cols() != a.dim) throw ShapeError("derivation matrix does not match dim");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec leibniz = a.multiply(d.col(i), a.basis(j));
      add_scaled(leibniz, 1, a.multiply(a.basis(i), d.col(j)));
      if (d.apply(a.mult.on_basis(i, j)) != leibniz)
        throw DerivationError("derivation law fails at basis pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }

  TPAlgebraData tp;
  tp.algebra = a;
  tp.algebra.commutative_claimed = true;
  tp.bracket = BilinearMap(a.dim, a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Vec br = a.multiply(a.basis(i), d.col(j));
      add_scaled(br, -1, a.multiply(d.col(i), a.basis(j)));
      tp.bracket.set_on_basis(i, j, br);
    }

  Report rep = verify_tp_algebra(tp);
  if (!rep.pass)
    throw Error("derivation bracket failed verification: " + format_witness(rep.witnesses.front()));
  return tp;
}

inline TPAlgebraData with_zero_bracket(const AlgebraData& a) {
  TPAlgebraData tp;
  tp.algebra = a;
  tp.algebra.commutative_claimed = true;
  tp.bracket = BilinearMap(a.dim, a.dim, a.dim);
  return tp;
}

}  // namespace tphopf
