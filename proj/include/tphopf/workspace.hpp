#pragma once

#include <map>
#include <optional>
#include <string>

#include "tphopf/gallery.hpp"
#include "tphopf/io/json_io.hpp"

namespace tphopf {

/// Named registry of loaded objects with provenance.  Every object is
/// re-verified on load — declared properties in files are hints, never
/// trusted — and cross-references (a module's over_algebra / over_hopf) must
/// resolve to already-registered names.
class Workspace {
 public:
  struct Provenance {
    std::string path;
    uint64_t hash = 0;
  };

  struct LoadResult {
    std::string name;
    std::string kind;
    Report verification;
  };

  /// Kind is detected from the fields present: antipode → hopf algebra,
  /// act/lie_act → module, bracket (+coaction) → (comodule) transposed
  /// Poisson algebra, matrix+flags → phi.
  LoadResult load(const std::string& path) {
    Json j = load_json(path);
    std::string text = canonical_dump(j);
    std::string name = j.value("name", stem_of(path));
    LoadResult result{name, "", {}};

    if (j.contains("antipode")) {
      result.kind = "hopf";
      HopfAlgebraData h = hopf_from_json(j);
      result.verification = verify_hopf(h);
      hopfs_[name] = std::move(h);
    } else if (j.contains("act") && j.contains("lie_act")) {
      result.kind = "module";
      const ComoduleTPAlgebra& a = resolve_algebra(j.value("over_algebra", std::string()));
      const HopfAlgebraData& h = resolve_hopf(j.value("over_hopf", std::string()));
      TPHopfModuleData m = module_from_json(j, a.dim(), h.dim());
      result.verification = verify_tp_hopf_module(m, a, h);
      modules_[name] = {std::move(m), j.value("over_algebra", std::string()),
                        j.value("over_hopf", std::string())};
    } else if (j.contains("matrix") && j.contains("flags")) {
      result.kind = "phi";
      const ComoduleTPAlgebra& a = resolve_algebra(j.value("over_algebra", std::string()));
      const HopfAlgebraData& h = resolve_hopf(j.value("over_hopf", std::string()));
      ColinearAlgebraMap phi = phi_from_json(j, a, h);
      // declared flags are compared against the recomputed truth
      if (j["flags"].is_object())
        for (const auto& [key, val] : j["flags"].items()) {
          bool actual = key == "colinear"          ? phi.flags.colinear
                        : key == "algebra_map"     ? phi.flags.algebra_map
                        : key == "unit_preserving" ? phi.flags.unit_preserving
                        : key == "lands_in_center" ? phi.flags.lands_in_center
                                                   : false;
          if (val.is_boolean() && val.get<bool>() && !actual)
            result.verification.fail("phi-declared-flag-" + key, {}, {Rational(1)}, {Rational(0)});
        }
      phis_[name] = std::move(phi);
    } else if (j.contains("bracket") && j.contains("coaction")) {
      result.kind = "comodule-tp-algebra";
      const HopfAlgebraData& h = resolve_hopf(j.value("over_hopf", std::string()));
      ComoduleTPAlgebra a = comodule_tp_algebra_from_json(j, h);
      result.verification = verify_comodule_tp_algebra(a, h);
      algebras_[name] = {std::move(a), j.value("over_hopf", std::string())};
    } else if (j.contains("bracket")) {
      result.kind = "tp-algebra";
      TPAlgebraData a = tp_algebra_from_json(j);
      result.verification = verify_tp_algebra(a);
      tp_algebras_[name] = std::move(a);
    } else {
      result.kind = "algebra";
      AlgebraData a = algebra_from_json(j);
      result.verification = verify_algebra(a);
      plain_algebras_[name] = std::move(a);
    }
    provenance_[name] = {path, content_hash(text)};
    return result;
  }

  /// Registers a gallery fixture under its own names.
  void add_fixture(const Fixture& f) {
    HopfAlgebraData h = f.hopf;
    verify_hopf(h);
    hopfs_[f.name + ".hopf"] = h;
    if (f.algebra) algebras_[f.name + ".algebra"] = {*f.algebra, f.name + ".hopf"};
    if (f.module) modules_[f.name + ".module"] = {*f.module, f.name + ".algebra", f.name + ".hopf"};
    if (f.phi) phis_[f.name + ".phi"] = *f.phi;
  }

  const HopfAlgebraData& resolve_hopf(const std::string& name) const {
    auto it = hopfs_.find(name);
    if (it == hopfs_.end()) throw ParseError("unresolved hopf algebra reference: '" + name + "'");
    return it->second;
  }

  const ComoduleTPAlgebra& resolve_algebra(const std::string& name) const {
    auto it = algebras_.find(name);
    if (it == algebras_.end()) throw ParseError("unresolved algebra reference: '" + name + "'");
    return it->second.first;
  }

  const TPHopfModuleData& resolve_module(const std::string& name) const {
    auto it = modules_.find(name);
    if (it == modules_.end()) throw ParseError("unresolved module reference: '" + name + "'");
    return it->second.module;
  }

  const ColinearAlgebraMap& resolve_phi(const std::string& name) const {
    auto it = phis_.find(name);
    if (it == phis_.end()) throw ParseError("unresolved phi reference: '" + name + "'");
    return it->second;
  }

  std::optional<Provenance> provenance(const std::string& name) const {
    auto it = provenance_.find(name);
    if (it == provenance_.end()) return std::nullopt;
    return it->second;
  }

 private:
  static std::string stem_of(const std::string& path) {
    size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = base.find('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
  }

  struct ModuleEntry {
    TPHopfModuleData module;
    std::string over_algebra, over_hopf;
  };

  std::map<std::string, HopfAlgebraData> hopfs_;
  std::map<std::string, std::pair<ComoduleTPAlgebra, std::string>> algebras_;
  std::map<std::string, TPAlgebraData> tp_algebras_;
  std::map<std::string, AlgebraData> plain_algebras_;
  std::map<std::string, ModuleEntry> modules_;
  std::map<std::string, ColinearAlgebraMap> phis_;
  std::map<std::string, Provenance> provenance_;
};

}  // namespace tphopf
