#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tphopf/hopfcore/builders.hpp"
#include "tphopf/invariants/colinear_map.hpp"
#include "tphopf/repcat/hopf_module.hpp"

namespace tphopf {

/// A ready-made, fully verified example: Hopf algebra, comodule transposed
/// Poisson algebra, the regular module over it, and a colinear map when one
/// with useful flags exists.  The gallery doubles as a regression suite: a
/// fixture that fails its own verifiers is a bug.
struct Fixture {
  std::string name;
  std::string description;
  HopfAlgebraData hopf;
  std::optional<ComoduleTPAlgebra> algebra;
  std::optional<TPHopfModuleData> module;
  std::optional<ColinearAlgebraMap> phi;
};

inline std::vector<std::string> gallery_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 6; ++n) names.push_back("c" + std::to_string(n) + "-regular");
  for (int n = 2; n <= 6; ++n) names.push_back("a" + std::to_string(n) + "-derivation");
  for (int n = 2; n <= 6; ++n) names.push_back("a" + std::to_string(n) + "-zero");
  names.push_back("a3-euler-c2");
  names.push_back("sweedler-h4");
  return names;
}

inline Fixture make_fixture(const std::string& name) {
  auto starts = [&](const std::string& prefix) {
    return name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0;
  };
  auto family_order = [&](const std::string& prefix, const std::string& suffix) -> int {
    if (!starts(prefix)) return 0;
    std::string mid = name.substr(prefix.size());
    if (mid.size() <= suffix.size() || mid.compare(mid.size() - suffix.size(), suffix.size(), suffix) != 0)
      return 0;
    mid = mid.substr(0, mid.size() - suffix.size());
    if (mid.empty() || mid.find_first_not_of("0123456789") != std::string::npos) return 0;
    int n = std::stoi(mid);
    return (n >= 2 && n <= 6) ? n : 0;
  };

  if (int n = family_order("c", "-regular")) {
    Fixture f;
    f.name = name;
    f.description = "A = M = H = Q[C" + std::to_string(n) + "], zero bracket, coaction = comultiplication, phi = id";
    f.hopf = group_algebra({n});
    f.algebra = regular_comodule_algebra(f.hopf);
    f.module = regular_module(*f.algebra);
    f.phi = identity_phi(*f.algebra, f.hopf);
    return f;
  }
  if (int n = family_order("a", "-derivation")) {
    Fixture f;
    f.name = name;
    f.description = "Q[x]/(x^" + std::to_string(n) + ") with the Euler bracket x·d/dx over the trivial Hopf algebra";
    f.hopf = trivial_hopf();
    TPAlgebraData tp = derivation_bracket(truncated_polynomial_algebra(n), euler_derivation(n));
    f.algebra = with_trivial_coaction(tp, f.hopf);
    f.module = regular_module(*f.algebra);
    f.phi = counit_unit_phi(*f.algebra, f.hopf);
    return f;
  }
  if (int n = family_order("a", "-zero")) {
    Fixture f;
    f.name = name;
    f.description = "Q[x]/(x^" + std::to_string(n) + ") with the zero bracket over the trivial Hopf algebra";
    f.hopf = trivial_hopf();
    f.algebra = with_trivial_coaction(with_zero_bracket(truncated_polynomial_algebra(n)), f.hopf);
    f.module = regular_module(*f.algebra);
    f.phi = counit_unit_phi(*f.algebra, f.hopf);
    return f;
  }
  if (name == "a3-euler-c2") {
    Fixture f;
    f.name = name;
    f.description = "Q[x]/(x^3) with the Euler bracket, graded Q[C2]-coaction x^k -> x^k⊗g^k";
    f.hopf = group_algebra({2});
    TPAlgebraData tp = derivation_bracket(truncated_polynomial_algebra(3), euler_derivation(3));
    ComoduleData co{3, Matrix(6, 3)};
    for (int k = 0; k < 3; ++k) co.coaction(k * 2 + (k % 2), k) = 1;
    f.algebra = ComoduleTPAlgebra{tp, co};
    f.module = regular_module(*f.algebra);
    // φ(1) = 1, φ(g) = 0: colinear into the center, not an algebra map
    Matrix phi_m(3, 2);
    phi_m(0, 0) = 1;
    f.phi = make_verified_phi(phi_m, *f.algebra, f.hopf);
    return f;
  }
  if (name == "sweedler-h4") {
    Fixture f;
    f.name = name;
    f.description = "Sweedler's 4-dimensional Hopf algebra (antipode of order 4)";
    f.hopf = sweedler_h4();
    return f;
  }
  throw ParseError("unknown example name: " + name);
}

/// Runs every applicable verifier; throws on the first failure.
inline void verify_fixture(const Fixture& f) {
  HopfAlgebraData h = f.hopf;
  Report hr = verify_hopf(h);
  if (!hr.pass) throw Error("fixture " + f.name + " has an invalid hopf algebra");
  if (f.algebra) {
    Report ar = verify_comodule_tp_algebra(*f.algebra, f.hopf);
    if (!ar.pass)
      throw Error("fixture " + f.name + " has an invalid comodule algebra: " +
                  format_witness(ar.witnesses.front()));
  }
  if (f.module) {
    Report mr = verify_tp_hopf_module(*f.module, *f.algebra, f.hopf);
    if (!mr.pass) throw Error("fixture " + f.name + " has an invalid module");
  }
}

}  // namespace tphopf
