// Command-line front end: validate structure-constant files, compute
// invariants, run the fundamental-theorem and adjunction pipelines, and emit
// the example gallery.  Exit codes: 0 pass/VALID, 1 verified-false/DIAGNOSTIC,
// 2 input error.

#include <CLI11.hpp>
#include <iostream>

#include "tphopf/fundamental/adjunction.hpp"
#include "tphopf/invariants/field_test.hpp"
#include "tphopf/invariants/ideal.hpp"
#include "tphopf/invariants/splitting.hpp"
#include "tphopf/workspace.hpp"

using namespace tphopf;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  bool json = false;
  unsigned seed = 0;
};

struct VerificationFailure {
  std::string subject;
  Report report;
  std::vector<std::string> names;
};

void print_report(const Report& rep, const std::vector<std::string>& names) {
  for (const auto& w : rep.witnesses) std::cout << "  " << format_witness(w, names) << "\n";
}

int emit_report(const Options& opt, const std::string& subject, const Report& rep,
                const std::vector<std::string>& names) {
  if (opt.json) {
    Json j = report_to_json(rep, names);
    j["seed"] = opt.seed;
    j["subject"] = subject;
    std::cout << canonical_dump(j);
  } else {
    std::cout << subject << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
    print_report(rep, names);
  }
  return rep.pass ? kExitPass : kExitFail;
}

Json subspace_report(const Subspace& s, const std::vector<std::string>& names) {
  Json j = subspace_to_json(s);
  Json printed = Json::array();
  for (int r = 0; r < s.dim(); ++r) printed.push_back(format_element(s.basis_vector(r), names));
  j["elements"] = printed;
  return j;
}

void print_subspace(const std::string& label, const Subspace& s,
                    const std::vector<std::string>& names) {
  std::cout << label << ": dim " << s.dim() << "\n";
  for (int r = 0; r < s.dim(); ++r)
    std::cout << "  " << format_element(s.basis_vector(r), names) << "\n";
}

// ---- loading with verification --------------------------------------------

HopfAlgebraData load_hopf(const std::string& path) {
  Json j = load_json(path);
  HopfAlgebraData h = hopf_from_json(j);
  Report rep = verify_hopf(h);
  if (!rep.pass) throw VerificationFailure{"hopf algebra " + path, rep, h.algebra.basis_names};
  return h;
}

ComoduleTPAlgebra load_comodule_algebra(const std::string& path, const HopfAlgebraData& h) {
  Json j = load_json(path);
  ComoduleTPAlgebra a = comodule_tp_algebra_from_json(j, h);
  Report rep = verify_comodule_tp_algebra(a, h);
  if (!rep.pass) throw VerificationFailure{"comodule algebra " + path, rep, a.algebra().basis_names};
  return a;
}

TPHopfModuleData load_module(const std::string& path, const ComoduleTPAlgebra& a,
                             const HopfAlgebraData& h) {
  Json j = load_json(path);
  TPHopfModuleData m = module_from_json(j, a.dim(), h.dim());
  Report rep = verify_tp_hopf_module(m, a, h);
  if (!rep.pass) throw VerificationFailure{"module " + path, rep, {}};
  return m;
}

ColinearAlgebraMap load_phi(const std::string& path, const ComoduleTPAlgebra& a,
                            const HopfAlgebraData& h) {
  return phi_from_json(load_json(path), a, h);
}

// ---- check ------------------------------------------------------------------

int run_check(const Options& opt, const std::string& what, const std::string& file,
              const std::string& algebra_file, const std::string& hopf_file) {
  if (what == "algebra") {
    AlgebraData a = algebra_from_json(load_json(file));
    return emit_report(opt, "algebra " + file, verify_algebra(a), a.basis_names);
  }
  if (what == "hopf") {
    Json j = load_json(file);
    HopfAlgebraData h = hopf_from_json(j);
    try {
      return emit_report(opt, "hopf " + file, verify_hopf(h), h.algebra.basis_names);
    } catch (const BijectivityError& e) {
      std::cout << "hopf " << file << ": FAIL (" << e.what() << ")\n";
      return kExitFail;
    }
  }
  if (what == "tp") {
    TPAlgebraData a = tp_algebra_from_json(load_json(file));
    return emit_report(opt, "tp " + file, verify_tp_algebra(a), a.algebra.basis_names);
  }

  HopfAlgebraData h = load_hopf(hopf_file);
  if (what == "comodule") {
    ComoduleTPAlgebra a = comodule_tp_algebra_from_json(load_json(file), h);
    return emit_report(opt, "comodule " + file, verify_comodule_tp_algebra(a, h),
                       a.algebra().basis_names);
  }
  ComoduleTPAlgebra a = load_comodule_algebra(algebra_file, h);
  TPHopfModuleData m = module_from_json(load_json(file), a.dim(), h.dim());
  if (what == "module")
    return emit_report(opt, "module " + file, verify_tp_module(m, a), {});
  return emit_report(opt, "hopf-module " + file, verify_tp_hopf_module(m, a, h), {});
}

// ---- compute ----------------------------------------------------------------

int run_compute(Options opt, const std::string& what, const std::string& tp_file,
                const std::string& algebra_file, const std::string& hopf_file,
                const std::string& module_file, const std::string& phi_file,
                const std::string& seed_vector) {
  // `compute ideal-closure --seed` takes a vector; on every other compute
  // subcommand a bare --seed N is the sampling seed
  if (!seed_vector.empty() && what != "ideal-closure") {
    try {
      opt.seed = static_cast<unsigned>(std::stoul(seed_vector));
    } catch (const std::exception&) {
      throw ParseError("--seed expects a number here (vectors only for ideal-closure)");
    }
  }
  if (what == "center") {
    TPAlgebraData a = tp_algebra_from_json(load_json(tp_file.empty() ? algebra_file : tp_file));
    Report rep = verify_tp_algebra(a);
    if (!rep.pass) throw VerificationFailure{"tp algebra", rep, a.algebra.basis_names};
    CenterSubspace center = tp_center(a);
    if (opt.json) {
      Json j;
      j["center"] = subspace_report(center.carrier, a.algebra.basis_names);
      j["seed"] = opt.seed;
      std::cout << canonical_dump(j);
    } else {
      print_subspace("transposed Poisson center", center.carrier, a.algebra.basis_names);
    }
    return kExitPass;
  }

  HopfAlgebraData h = load_hopf(hopf_file);
  ComoduleTPAlgebra a = load_comodule_algebra(algebra_file, h);
  const auto& names = a.algebra().basis_names;

  if (what == "coinvariants" || what == "lie-invariants") {
    TPHopfModuleData m = module_file.empty() ? regular_module(a) : load_module(module_file, a, h);
    Subspace s = what == "coinvariants" ? coinvariants(m.coaction, h) : lie_invariants(m, a);
    std::vector<std::string> element_names = module_file.empty() ? names : std::vector<std::string>{};
    if (opt.json) {
      Json j;
      j[what] = subspace_report(s, element_names);
      j["seed"] = opt.seed;
      std::cout << canonical_dump(j);
    } else {
      print_subspace(what, s, element_names);
    }
    return kExitPass;
  }
  if (what == "B") {
    AlgebraInvariants inv = algebra_invariants(a, h);
    FieldReport field = is_field(inv.b.induced, opt.seed);
    if (opt.json) {
      Json j;
      j["B"] = subspace_report(inv.b.carrier, names);
      j["center"] = subspace_report(inv.center.carrier, names);
      j["coinvariants"] = subspace_report(inv.coinv, names);
      j["field_status"] = field.status == FieldStatus::field       ? "Field"
                          : field.status == FieldStatus::not_field ? "NotField"
                                                                   : "Inconclusive";
      j["certificates"] = report_to_json(inv.certificates, names);
      j["seed"] = opt.seed;
      std::cout << canonical_dump(j);
    } else {
      print_subspace("A^A", inv.center.carrier, names);
      print_subspace("A^coH", inv.coinv, names);
      print_subspace("B = A^AcoH", inv.b.carrier, names);
      std::cout << "B field status: "
                << (field.status == FieldStatus::field       ? "Field"
                    : field.status == FieldStatus::not_field ? "NotField"
                                                             : "Inconclusive")
                << "\n";
    }
    return inv.certificates.pass ? kExitPass : kExitFail;
  }
  if (what == "ideal-closure") {
    Vec seed_vec;
    std::string token;
    std::istringstream stream(seed_vector);
    while (std::getline(stream, token, ',')) seed_vec.push_back(parse_rational(token));
    if (static_cast<int>(seed_vec.size()) != a.dim())
      throw ParseError("seed vector needs " + std::to_string(a.dim()) + " entries");
    Subspace closed = ideal_closure(a, Subspace::span(a.dim(), {seed_vec}));
    if (opt.json) {
      Json j;
      j["ideal_closure"] = subspace_report(closed, names);
      j["seed"] = opt.seed;
      std::cout << canonical_dump(j);
    } else {
      print_subspace("Poisson H-ideal closure", closed, names);
    }
    return kExitPass;
  }

  TPHopfModuleData m = module_file.empty() ? regular_module(a) : load_module(module_file, a, h);
  ColinearAlgebraMap phi = load_phi(phi_file, a, h);
  if (what == "p") {
    ProjectionResult p = projection_p(m, phi, h);
    if (opt.json) {
      Json j;
      j["matrix"] = matrix_to_json(p.matrix);
      j["certificate"] = report_to_json(p.report, names);
      j["seed"] = opt.seed;
      std::cout << canonical_dump(j);
    } else {
      std::cout << "p_M certificate: " << (p.report.pass ? "pass" : "FAIL") << "\n";
      print_report(p.report, names);
    }
    return p.report.pass ? kExitPass : kExitFail;
  }
  // lambda
  LambdaResult l = lambda_map(m, phi, a, h);
  if (opt.json) {
    Json j;
    j["matrix"] = matrix_to_json(l.lambda);
    j["certificate"] = report_to_json(l.report, names);
    j["seed"] = opt.seed;
    std::cout << canonical_dump(j);
  } else {
    std::cout << "lambda certificate: " << (l.report.pass ? "pass" : "FAIL") << "\n";
    print_report(l.report, names);
  }
  return l.report.pass ? kExitPass : kExitFail;
}

// ---- fundamental / adjunction -------------------------------------------------

Json certificate_to_json(const IsoCertificate& cert, const Options& opt) {
  Json j;
  j["status"] = cert.status == CertStatus::valid ? "VALID" : "DIAGNOSTIC";
  j["failed_hypotheses"] = cert.failed_hypotheses;
  j["dims"] = {{"M", cert.dim_m},          {"McoH", cert.dim_coinv}, {"MA", cert.dim_lie_inv},
               {"MAcoH", cert.dim_joint},  {"B", cert.dim_b},        {"tensor", cert.dim_tensor}};
  if (cert.conditions) {
    j["condition_31"] = report_to_json(cert.conditions->c31);
    j["condition_32"] = report_to_json(cert.conditions->c32);
    j["coincidence"] = cert.conditions->coincidence;
  }
  j["alpha"] = {{"bijective", cert.alpha.bijective},
                {"morphism", cert.alpha.morphism.pass},
                {"well_defined", cert.alpha.well_defined.pass}};
  j["beta_built"] = cert.beta.has_value();
  j["composites_identity"] = cert.alpha_beta_identity && cert.beta_alpha_identity;
  j["rank_data"] = {{"applicable", cert.rank_applicable}, {"equality", cert.rank_equality}};
  j["seed"] = opt.seed;
  return j;
}

int run_fundamental(const Options& opt, const std::string& algebra_file,
                    const std::string& hopf_file, const std::string& module_file,
                    const std::string& phi_file, const std::string& b_arg) {
  HopfAlgebraData h = load_hopf(hopf_file);
  ComoduleTPAlgebra a = load_comodule_algebra(algebra_file, h);
  TPHopfModuleData m = module_file.empty() ? regular_module(a) : load_module(module_file, a, h);
  ColinearAlgebraMap phi = load_phi(phi_file, a, h);

  std::optional<SubalgebraData> b_override;
  if (!b_arg.empty() && b_arg != "auto")
    b_override = induced_subalgebra(subspace_from_json(load_json(b_arg)), a.algebra());

  IsoCertificate cert = beta_and_certify(m, a, h, phi, b_override);
  if (opt.json) {
    std::cout << canonical_dump(certificate_to_json(cert, opt));
  } else {
    std::cout << "fundamental: " << (cert.status == CertStatus::valid ? "VALID" : "DIAGNOSTIC")
              << "\n";
    std::cout << "  dims: M=" << cert.dim_m << " McoH=" << cert.dim_coinv
              << " MAcoH=" << cert.dim_joint << " B=" << cert.dim_b
              << " A⊗_B M^AcoH=" << cert.dim_tensor << "\n";
    for (const auto& hyp : cert.failed_hypotheses) std::cout << "  failed hypothesis: " << hyp << "\n";
    if (cert.conditions && !cert.conditions->c31.pass)
      print_report(cert.conditions->c31, a.algebra().basis_names);
    std::cout << "  alpha bijective: " << (cert.alpha.bijective ? "yes" : "no") << "\n";
    if (cert.rank_applicable)
      std::cout << "  rank equality dim M = dim M^AcoH * dim A: "
                << (cert.rank_equality ? "yes" : "no") << "\n";
  }
  return cert.status == CertStatus::valid ? kExitPass : kExitFail;
}

int run_adjunction(const Options& opt, const std::string& algebra_file,
                   const std::string& hopf_file, const std::string& module_file, int n_rank) {
  HopfAlgebraData h = load_hopf(hopf_file);
  ComoduleTPAlgebra a = load_comodule_algebra(algebra_file, h);
  TPHopfModuleData m = module_file.empty() ? regular_module(a) : load_module(module_file, a, h);

  AlgebraInvariants inv = algebra_invariants(a, h);
  BModuleData n = free_b_module(inv.b, n_rank);
  AdjunctionResult r = adjunction_psi(n, m, a, h, inv.b);
  if (opt.json) {
    Json j;
    j["hom_dims"] = {{"FN_to_M", r.hom_fn_m.dim()}, {"N_to_GM", r.hom_b_n_g.dim()}};
    j["verified"] = r.verified;
    j["triangles"] = r.triangles;
    j["seed"] = opt.seed;
    std::cout << canonical_dump(j);
  } else {
    std::cout << "adjunction with N = B^" << n_rank << ": hom dims " << r.hom_fn_m.dim() << " / "
              << r.hom_b_n_g.dim() << ", psi inverse pair " << (r.verified ? "verified" : "FAILED")
              << ", triangles " << (r.triangles ? "verified" : "FAILED") << "\n";
  }
  return (r.verified && r.triangles) ? kExitPass : kExitFail;
}

// ---- example gallery ---------------------------------------------------------

int run_example(const Options& opt, const std::string& name, const std::string& dir) {
  if (name == "list") {
    for (const auto& n : gallery_names()) std::cout << n << "\n";
    return kExitPass;
  }
  Fixture f = make_fixture(name);
  verify_fixture(f);

  std::string base = dir.empty() ? name : dir + "/" + name;
  std::vector<std::string> written;
  save_json(hopf_to_json(f.hopf, name + ".hopf"), base + ".hopf.json");
  written.push_back(base + ".hopf.json");
  if (f.algebra) {
    save_json(comodule_tp_algebra_to_json(*f.algebra, name + ".algebra", name + ".hopf"),
              base + ".algebra.json");
    written.push_back(base + ".algebra.json");
  }
  if (f.module) {
    Json j = module_to_json(*f.module, name + ".module", name + ".algebra", name + ".hopf");
    save_json(j, base + ".module.json");
    written.push_back(base + ".module.json");
  }
  if (f.phi) {
    Json j = phi_to_json(*f.phi);
    j["name"] = name + ".phi";
    j["over_algebra"] = name + ".algebra";
    j["over_hopf"] = name + ".hopf";
    save_json(j, base + ".phi.json");
    written.push_back(base + ".phi.json");
  }

  if (opt.json) {
    Json j;
    j["description"] = f.description;
    j["files"] = written;
    j["name"] = name;
    j["seed"] = opt.seed;
    std::cout << canonical_dump(j);
  } else {
    std::cout << name << ": " << f.description << "\n";
    for (const auto& w : written) std::cout << "  wrote " << w << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant engine for transposed Poisson Hopf modules"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--seed", opt.seed, "seed for sampled certificates (field test)");

  std::string file, algebra_file, hopf_file, module_file, phi_file, tp_file;
  std::string b_arg = "auto", seed_vector, dir, name, what;
  int n_rank = 1;

  CLI::App* check = app.add_subcommand("check", "verify a structure-constant file");
  check->fallthrough();
  check->add_option("kind", what, "algebra|hopf|tp|comodule|module|hopf-module")->required();
  check->add_option("file", file, "input file")->required();
  check->add_option("--algebra", algebra_file, "comodule algebra file (module checks)");
  check->add_option("--hopf", hopf_file, "hopf algebra file");

  CLI::App* compute = app.add_subcommand("compute", "compute invariants and maps");
  compute->fallthrough();
  compute->add_option("kind", what, "center|coinvariants|lie-invariants|B|p|lambda|ideal-closure")
      ->required();
  compute->add_option("--tp", tp_file, "transposed Poisson algebra file (center)");
  compute->add_option("--algebra", algebra_file, "comodule algebra file");
  compute->add_option("--hopf", hopf_file, "hopf algebra file");
  compute->add_option("--module", module_file, "module file (defaults to the regular module)");
  compute->add_option("--phi", phi_file, "colinear map file (p, lambda)");
  compute->add_option("--seed", seed_vector, "seed vector for ideal-closure, e.g. \"0,1,0\"");

  CLI::App* fundamental = app.add_subcommand("fundamental", "fundamental-theorem certificate");
  fundamental->fallthrough();
  fundamental->add_option("--algebra", algebra_file)->required();
  fundamental->add_option("--hopf", hopf_file)->required();
  fundamental->add_option("--module", module_file, "defaults to the regular module");
  fundamental->add_option("--phi", phi_file)->required();
  fundamental->add_option("--B", b_arg, "auto (computed A^AcoH) or a subspace file");

  CLI::App* adjunction = app.add_subcommand("adjunction", "adjunction between A⊗_B(-) and (-)^AcoH");
  adjunction->fallthrough();
  adjunction->add_option("--algebra", algebra_file)->required();
  adjunction->add_option("--hopf", hopf_file)->required();
  adjunction->add_option("--module", module_file, "defaults to the regular module");
  adjunction->add_option("--n-rank", n_rank, "use N = B^rank (default 1)");

  CLI::App* example = app.add_subcommand("example", "emit a verified gallery fixture");
  example->fallthrough();
  example->add_option("name", name, "fixture name, or 'list'")->required();
  example->add_option("--dir", dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(opt, what, file, algebra_file, hopf_file);
    if (compute->parsed())
      return run_compute(opt, what, tp_file, algebra_file, hopf_file, module_file, phi_file,
                         seed_vector);
    if (fundamental->parsed())
      return run_fundamental(opt, algebra_file, hopf_file, module_file, phi_file, b_arg);
    if (adjunction->parsed())
      return run_adjunction(opt, algebra_file, hopf_file, module_file, n_rank);
    if (example->parsed()) return run_example(opt, name, dir);
  } catch (const VerificationFailure& f) {
    std::cout << f.subject << ": FAIL\n";
    print_report(f.report, f.names);
    return kExitFail;
  } catch (const HypothesisError& e) {
    std::cout << "hypothesis error: " << e.what() << "\n";
    return kExitFail;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ShapeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
