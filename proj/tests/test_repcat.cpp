#include <catch2/catch_amalgamated.hpp>

#include "tphopf/hopfcore/builders.hpp"
#include "tphopf/repcat/hom_space.hpp"

using namespace tphopf;

namespace {

// A = M = H = Q[C2], zero bracket, coaction Δ.
ComoduleTPAlgebra c2_regular() { return regular_comodule_algebra(group_algebra({2})); }

// Q[x]/(x^3) with the Euler bracket over H = Q[C2], graded coaction
// x^k ↦ x^k ⊗ g^k.  A genuinely twisted comodule transposed Poisson algebra.
ComoduleTPAlgebra a3_euler_c2() {
  TPAlgebraData tp = derivation_bracket(truncated_polynomial_algebra(3), euler_derivation(3));
  ComoduleData co{3, Matrix(6, 3)};
  for (int k = 0; k < 3; ++k) co.coaction(k * 2 + (k % 2), k) = 1;
  return {tp, co};
}

// Same algebra and coaction but with the degree-shifting bracket from
// D = x²·d/dx; the bracket moves degree by one, so it cannot be colinear.
ComoduleTPAlgebra a3_shift_c2() {
  Matrix d(3, 3);
  d(2, 1) = 1;  // D(x) = x², D(x²) = 2x³ = 0
  TPAlgebraData tp = derivation_bracket(truncated_polynomial_algebra(3), d);
  ComoduleData co{3, Matrix(6, 3)};
  for (int k = 0; k < 3; ++k) co.coaction(k * 2 + (k % 2), k) = 1;
  return {tp, co};
}

}  // namespace

TEST_CASE("comodule axioms") {
  HopfAlgebraData c2 = group_algebra({2});
  CHECK(verify_comodule(regular_comodule(c2), c2).pass);
  CHECK(verify_comodule(trivial_comodule(3, c2), c2).pass);

  // ρ(m) = m⊗(1+g) fails the counit law with (id⊗ε)ρ(m) = 2m
  ComoduleData bad{1, Matrix(2, 1)};
  bad.coaction(0, 0) = 1;
  bad.coaction(1, 0) = 1;
  Report rep = verify_comodule(bad, c2);
  CHECK_FALSE(rep.pass);
  bool found = false;
  for (const auto& w : rep.witnesses)
    if (w.law == "comodule-counit") {
      found = true;
      CHECK(w.lhs == Vec{Rational(2)});
    }
  CHECK(found);
}

TEST_CASE("comodule transposed Poisson algebras") {
  HopfAlgebraData c2 = group_algebra({2});

  SECTION("zero bracket over the regular coaction passes") {
    CHECK(verify_comodule_tp_algebra(c2_regular(), c2).pass);
  }
  SECTION("trivial coaction over any valid bracket passes") {
    TPAlgebraData tp = derivation_bracket(truncated_polynomial_algebra(4), euler_derivation(4));
    CHECK(verify_comodule_tp_algebra(with_trivial_coaction(tp, trivial_hopf()), trivial_hopf()).pass);
  }
  SECTION("Euler bracket is colinear for the grading coaction") {
    CHECK(verify_comodule_tp_algebra(a3_euler_c2(), c2).pass);
  }
  SECTION("degree-shifting bracket fails Eq-style colinearity at (1,x)") {
    Report rep = verify_comodule_tp_algebra(a3_shift_c2(), c2);
    CHECK_FALSE(rep.pass);
    bool found = false;
    for (const auto& w : rep.witnesses) {
      CHECK(w.law == "bracket-colinearity");  // everything else holds
      if (w.where == std::vector<int>{0, 1}) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("transposed Poisson module laws") {
  SECTION("the regular module always passes") {
    for (const ComoduleTPAlgebra& a : {c2_regular(), a3_euler_c2(), a3_shift_c2()})
      CHECK(verify_tp_module(regular_module(a), a).pass);
  }
  SECTION("zero bracket and zero Lie action pass") {
    ComoduleTPAlgebra a = c2_regular();
    TPHopfModuleData m = regular_module(a);
    m.lie_act = BilinearMap(2, 2, 2);
    CHECK(verify_tp_module(m, a).pass);
  }
  SECTION("killing the Lie action of a nonzero bracket fails with witness (1,x,1)") {
    HopfAlgebraData triv = trivial_hopf();
    TPAlgebraData tp = derivation_bracket(truncated_polynomial_algebra(3), euler_derivation(3));
    ComoduleTPAlgebra a = with_trivial_coaction(tp, triv);
    TPHopfModuleData m = regular_module(a);
    m.lie_act = BilinearMap(3, 3, 3);
    Report rep = verify_tp_module(m, a);
    CHECK_FALSE(rep.pass);
    bool found = false;
    for (const auto& w : rep.witnesses)
      if (w.law == "tp-module-bracket-action" && w.where == std::vector<int>{0, 1, 0}) {
        found = true;
        CHECK(w.lhs == vec_scale(unit_vec(3, 1), 2));  // 2{1,x}·1 = 2x
        CHECK(w.rhs == zero_vec(3));
      }
    CHECK(found);
  }
}

TEST_CASE("associative actions against the center") {
  for (const ComoduleTPAlgebra& a : {c2_regular(), a3_euler_c2()}) {
    CenterSubspace center = tp_center(a.tp);
    CHECK(check_associative_actions(regular_module(a), a, center).pass);
  }
}

TEST_CASE("full Hopf module verification") {
  HopfAlgebraData c2 = group_algebra({2});
  SECTION("regular modules") {
    CHECK(verify_tp_hopf_module(regular_module(c2_regular()), c2_regular(), c2).pass);
    CHECK(verify_tp_hopf_module(regular_module(a3_euler_c2()), a3_euler_c2(), c2).pass);
  }
  SECTION("induced module N⊗H passes for commutative H") {
    ComoduleTPAlgebra a = a3_euler_c2();
    TPHopfModuleData m = induce_tensor_H(regular_tp_module(a), a, c2);
    CHECK(m.dim == 6);
    CHECK(verify_tp_hopf_module(m, a, c2).pass);
  }
  SECTION("untwisted Lie action on N⊗H violates the Lie Hopf compatibility") {
    ComoduleTPAlgebra a = a3_euler_c2();
    TPHopfModuleData m = induce_tensor_H(regular_tp_module(a), a, c2);
    // replace the Lie action with a⋄(n⊗h) := (a⋄n)⊗h
    BilinearMap untwisted(3, 6, 6);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 2; ++l)
          for (int k2 = 0; k2 < 3; ++k2)
            untwisted.at(i, k * 2 + l, k2 * 2 + l) = a.tp.bracket.at(i, k, k2);
    m.lie_act = untwisted;
    Report rep = verify_tp_hopf_module(m, a, c2);
    CHECK_FALSE(rep.pass);
    bool found = false;
    for (const auto& w : rep.witnesses)
      if (w.law == "lie-hopf-compatibility" && w.where == std::vector<int>{1, 0}) found = true;
    CHECK(found);
  }
}

TEST_CASE("induced module structure") {
  HopfAlgebraData c2 = group_algebra({2});
  SECTION("N = Q with zero Lie action induces H itself with coaction Δ") {
    ComoduleTPAlgebra a = c2_regular();
    TPHopfModuleData m = induce_tensor_H(LieModuleData{1, BilinearMap(2, 1, 1)}, a, c2);
    CHECK(m.dim == 2);
    CHECK(m.coaction.coaction == c2.coalgebra.comult);
    CHECK(verify_lie_comodule(m, a, c2).pass);
  }
  SECTION("N = A = H = Q[C2] gives a dim-4 module passing everything") {
    ComoduleTPAlgebra a = c2_regular();
    TPHopfModuleData m = induce_tensor_H(regular_tp_module(a), a, c2);
    CHECK(m.dim == 4);
    CHECK(verify_tp_hopf_module(m, a, c2).pass);
  }
  SECTION("noncommutative H rejects the algebra action level") {
    HopfAlgebraData h4 = sweedler_h4();
    ComoduleTPAlgebra a = with_trivial_coaction(with_zero_bracket(truncated_polynomial_algebra(2)), h4);
    REQUIRE(verify_comodule_tp_algebra(a, h4).pass);
    TPModuleData n = regular_tp_module(a);
    CHECK_THROWS_AS(induce_tensor_H(n, a, h4), HypothesisError);
    // the Lie level is still available
    TPHopfModuleData m = induce_tensor_H(LieModuleData{n.dim, n.lie_act}, a, h4);
    CHECK(verify_lie_comodule(m, a, h4).pass);
  }
}

TEST_CASE("hom spaces") {
  HopfAlgebraData c2 = group_algebra({2});
  ComoduleTPAlgebra a = c2_regular();

  SECTION("scalars: the trivial module maps to itself one-dimensionally") {
    TPHopfModuleData triv{1, BilinearMap(2, 1, 1), BilinearMap(2, 1, 1), trivial_comodule(1, c2)};
    for (int i = 0; i < 2; ++i) triv.act.at(i, 0, 0) = 1;  // augmentation action
    ModuleOps ops = module_ops(triv, 2);
    CHECK(hom_space(ops, ops, {true, true, true}, 2).dim() == 1);
  }
  SECTION("PA-hom of the regular module is one-dimensional") {
    ModuleOps ops = module_ops(regular_module(a), 2);
    MapSpace maps = hom_space(ops, ops, {true, true, true}, 2);
    CHECK(maps.dim() == 1);
    // f is determined by f(1) ∈ A^coH = span{1}
    Matrix f = maps.basis_map(0);
    CHECK(f.col(0) == vec_scale(unit_vec(2, 0), f(0, 0)));
  }
  SECTION("no flags: the full matrix space") {
    ModuleOps src = module_ops(regular_module(a), 2);
    TPHopfModuleData m = induce_tensor_H(regular_tp_module(a), a, c2);
    ModuleOps tgt = module_ops(m, 2);
    CHECK(hom_space(src, tgt, {false, false, false}, 2).dim() == 8);
  }
  SECTION("every solved map satisfies the flagged laws identically") {
    TPHopfModuleData induced = induce_tensor_H(regular_tp_module(a), a, c2);
    ModuleOps src = module_ops(regular_module(a), 2);
    ModuleOps tgt = module_ops(induced, 2);
    MapSpace maps = hom_space(src, tgt, {true, true, true}, 2);
    for (int k = 0; k < maps.dim(); ++k) {
      Matrix f = maps.basis_map(k);
      for (int i = 0; i < 2; ++i) {
        CHECK(f * src.act[static_cast<size_t>(i)] == tgt.act[static_cast<size_t>(i)] * f);
        CHECK(f * src.lie[static_cast<size_t>(i)] == tgt.lie[static_cast<size_t>(i)] * f);
      }
      CHECK(tgt.coaction * f == kron(f, Matrix::identity(2)) * src.coaction);
    }
  }
}

TEST_CASE("gamma isomorphism") {
  HopfAlgebraData c2 = group_algebra({2});
  ComoduleTPAlgebra a = c2_regular();

  SECTION("trivial modules: both hom spaces are scalars") {
    TPHopfModuleData m{1, BilinearMap(2, 1, 1), BilinearMap(2, 1, 1), trivial_comodule(1, c2)};
    GammaResult g = gamma_iso(m, LieModuleData{1, BilinearMap(2, 1, 1)}, a, c2);
    CHECK(g.verified);
    CHECK(g.hom_twisted.dim() == 1);
    CHECK(g.hom_plain.dim() == 1);
  }
  SECTION("M = A = H = Q[C2], N = A, transposed Poisson category") {
    GammaResult g = gamma_iso(regular_module(a), regular_tp_module(a), a, c2);
    CHECK(g.verified);
    CHECK(g.hom_twisted.dim() == g.hom_plain.dim());
  }
  SECTION("dimension equality on the twisted fixture") {
    ComoduleTPAlgebra ae = a3_euler_c2();
    TPHopfModuleData m = regular_module(ae);
    GammaResult lie_version =
        gamma_iso(m, LieModuleData{ae.dim(), ae.tp.bracket}, ae, c2);
    CHECK(lie_version.verified);
    GammaResult tp_version = gamma_iso(m, regular_tp_module(ae), ae, c2);
    CHECK(tp_version.verified);
  }
}
