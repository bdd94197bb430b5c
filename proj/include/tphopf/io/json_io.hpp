#pragma once

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "tphopf/fundamental/fundamental.hpp"
#include "tphopf/invariants/field_test.hpp"

// JSON is the only interchange format.  Writers emit sorted keys, canonical
// "p/q" rationals and two-space indentation, so saving a loaded canonical
// file reproduces it byte for byte.

namespace tphopf {

using Json = nlohmann::json;

inline Json to_json(const Rational& q) { return rational_str(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational (string or integer), got " + j.dump());
}

inline Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline Vec vec_from_json(const Json& j, int expect = -1) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  if (expect >= 0 && static_cast<int>(v.size()) != expect)
    throw ParseError("expected " + std::to_string(expect) + " entries, got " +
                     std::to_string(v.size()));
  return v;
}

inline Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

inline Matrix matrix_from_json(const Json& j, int rows = -1, int cols = -1) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  std::vector<Vec> r;
  for (const auto& row : j) r.push_back(vec_from_json(row, cols));
  if (rows >= 0 && static_cast<int>(r.size()) != rows)
    throw ParseError("expected " + std::to_string(rows) + " rows, got " + std::to_string(r.size()));
  int width = cols >= 0 ? cols : (r.empty() ? 0 : static_cast<int>(r[0].size()));
  return Matrix::from_rows(r, width);
}

inline Json tensor_to_json(const BilinearMap& f) {
  Json out = Json::array();
  for (int i = 0; i < f.left_dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < f.right_dim(); ++j) row.push_back(vec_to_json(f.on_basis(i, j)));
    out.push_back(row);
  }
  return out;
}

inline BilinearMap tensor_from_json(const Json& j, int da, int db, int dc) {
  if (!j.is_array() || static_cast<int>(j.size()) != da)
    throw ParseError("structure tensor has wrong left dimension");
  BilinearMap f(da, db, dc);
  for (int i = 0; i < da; ++i) {
    if (!j[static_cast<size_t>(i)].is_array() ||
        static_cast<int>(j[static_cast<size_t>(i)].size()) != db)
      throw ParseError("structure tensor has wrong right dimension");
    for (int jj = 0; jj < db; ++jj)
      f.set_on_basis(i, jj, vec_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(jj)], dc));
  }
  return f;
}

// ---- algebras -------------------------------------------------------------

inline Json algebra_to_json(const AlgebraData& a, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["dim"] = a.dim;
  j["basis"] = a.basis_names;
  j["mult"] = tensor_to_json(a.mult);
  j["unit"] = vec_to_json(a.unit);
  j["commutative"] = a.commutative_claimed;
  return j;
}

inline int dim_from_json(const Json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("missing or non-integer \"dim\"");
  int d = j["dim"].get<int>();
  if (d < 0) throw ParseError("negative \"dim\"");
  return d;
}

inline AlgebraData algebra_from_json(const Json& j) {
  AlgebraData a;
  a.dim = dim_from_json(j);
  if (j.contains("basis")) a.basis_names = j["basis"].get<std::vector<std::string>>();
  if (!j.contains("mult") || !j.contains("unit")) throw ParseError("algebra needs \"mult\" and \"unit\"");
  a.mult = tensor_from_json(j["mult"], a.dim, a.dim, a.dim);
  a.unit = vec_from_json(j["unit"], a.dim);
  a.commutative_claimed = j.value("commutative", false);
  require_algebra_shapes(a);
  return a;
}

inline Json hopf_to_json(const HopfAlgebraData& h, const std::string& name) {
  Json j = algebra_to_json(h.algebra, name);
  Json comult = Json::array();
  for (int i = 0; i < h.dim(); ++i) comult.push_back(vec_to_json(h.comult_of(i)));
  j["comult"] = comult;
  j["counit"] = vec_to_json(h.coalgebra.counit.row(0));
  j["antipode"] = matrix_to_json(h.antipode);
  return j;
}

inline HopfAlgebraData hopf_from_json(const Json& j) {
  HopfAlgebraData h;
  h.algebra = algebra_from_json(j);
  const int d = h.algebra.dim;
  if (!j.contains("comult") || !j.contains("counit") || !j.contains("antipode"))
    throw ParseError("hopf algebra needs \"comult\", \"counit\" and \"antipode\"");
  h.coalgebra.dim = d;
  h.coalgebra.comult = Matrix(d * d, d);
  if (!j["comult"].is_array() || static_cast<int>(j["comult"].size()) != d)
    throw ParseError("\"comult\" has wrong length");
  for (int i = 0; i < d; ++i)
    h.coalgebra.comult.set_col(i, vec_from_json(j["comult"][static_cast<size_t>(i)], d * d));
  h.coalgebra.counit = Matrix(1, d);
  Vec counit = vec_from_json(j["counit"], d);
  for (int i = 0; i < d; ++i) h.coalgebra.counit(0, i) = counit[static_cast<size_t>(i)];
  h.antipode = matrix_from_json(j["antipode"], d, d);
  return h;  // antipode inverse is computed by verify_hopf
}

// ---- transposed Poisson / comodule algebras -------------------------------

inline Json tp_algebra_to_json(const TPAlgebraData& a, const std::string& name) {
  Json j = algebra_to_json(a.algebra, name);
  j["bracket"] = tensor_to_json(a.bracket);
  return j;
}

inline TPAlgebraData tp_algebra_from_json(const Json& j) {
  TPAlgebraData a;
  a.algebra = algebra_from_json(j);
  if (!j.contains("bracket")) throw ParseError("transposed Poisson algebra needs \"bracket\"");
  a.bracket = tensor_from_json(j["bracket"], a.dim(), a.dim(), a.dim());
  return a;
}

inline Json comodule_tp_algebra_to_json(const ComoduleTPAlgebra& a, const std::string& name,
                                        const std::string& over_hopf) {
  Json j = tp_algebra_to_json(a.tp, name);
  Json coaction = Json::array();
  for (int i = 0; i < a.dim(); ++i) coaction.push_back(vec_to_json(a.coact_of(i)));
  j["coaction"] = coaction;
  if (!over_hopf.empty()) j["over_hopf"] = over_hopf;
  return j;
}

inline ComoduleTPAlgebra comodule_tp_algebra_from_json(const Json& j, const HopfAlgebraData& h) {
  ComoduleTPAlgebra a;
  a.tp = tp_algebra_from_json(j);
  if (!j.contains("coaction")) throw ParseError("comodule algebra needs \"coaction\"");
  if (!j["coaction"].is_array() || static_cast<int>(j["coaction"].size()) != a.dim())
    throw ParseError("\"coaction\" has wrong length");
  a.comodule.dim = a.dim();
  a.comodule.coaction = Matrix(a.dim() * h.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    a.comodule.coaction.set_col(i, vec_from_json(j["coaction"][static_cast<size_t>(i)], a.dim() * h.dim()));
  return a;
}

// ---- modules ---------------------------------------------------------------

inline Json module_to_json(const TPHopfModuleData& m, const std::string& name,
                           const std::string& over_algebra, const std::string& over_hopf) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["dim"] = m.dim;
  j["act"] = tensor_to_json(m.act);
  j["lie_act"] = tensor_to_json(m.lie_act);
  Json coaction = Json::array();
  for (int i = 0; i < m.dim; ++i) coaction.push_back(vec_to_json(m.coaction.coact_of(i)));
  j["coaction"] = coaction;
  if (!over_algebra.empty()) j["over_algebra"] = over_algebra;
  if (!over_hopf.empty()) j["over_hopf"] = over_hopf;
  return j;
}

inline TPHopfModuleData module_from_json(const Json& j, int dim_a, int dim_h) {
  TPHopfModuleData m;
  m.dim = dim_from_json(j);
  if (!j.contains("act") || !j.contains("lie_act") || !j.contains("coaction"))
    throw ParseError("module needs \"act\", \"lie_act\" and \"coaction\"");
  m.act = tensor_from_json(j["act"], dim_a, m.dim, m.dim);
  m.lie_act = tensor_from_json(j["lie_act"], dim_a, m.dim, m.dim);
  if (!j["coaction"].is_array() || static_cast<int>(j["coaction"].size()) != m.dim)
    throw ParseError("\"coaction\" has wrong length");
  m.coaction.dim = m.dim;
  m.coaction.coaction = Matrix(m.dim * dim_h, m.dim);
  for (int i = 0; i < m.dim; ++i)
    m.coaction.coaction.set_col(i, vec_from_json(j["coaction"][static_cast<size_t>(i)], m.dim * dim_h));
  return m;
}

// ---- phi -------------------------------------------------------------------

inline Json phi_to_json(const ColinearAlgebraMap& phi) {
  Json j;
  j["matrix"] = matrix_to_json(phi.map);
  j["flags"] = {{"algebra_map", phi.flags.algebra_map},
                {"colinear", phi.flags.colinear},
                {"lands_in_center", phi.flags.lands_in_center},
                {"unit_preserving", phi.flags.unit_preserving}};
  return j;
}

/// Declared flags are hints only; they are recomputed against (A, H).
inline ColinearAlgebraMap phi_from_json(const Json& j, const ComoduleTPAlgebra& a,
                                        const HopfAlgebraData& h) {
  if (!j.contains("matrix")) throw ParseError("phi needs \"matrix\"");
  Matrix m = matrix_from_json(j["matrix"], a.dim(), h.dim());
  return make_verified_phi(m, a, h);
}

// ---- subspaces and reports --------------------------------------------------

inline Json subspace_to_json(const Subspace& s) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  j["dim"] = s.dim();
  j["basis"] = matrix_to_json(s.basis());
  return j;
}

inline Subspace subspace_from_json(const Json& j) {
  if (!j.contains("ambient_dim") || !j.contains("basis"))
    throw ParseError("subspace needs \"ambient_dim\" and \"basis\"");
  int ambient = j["ambient_dim"].get<int>();
  Matrix basis = matrix_from_json(j["basis"], -1, ambient);
  std::vector<Vec> rows;
  for (int r = 0; r < basis.rows(); ++r) rows.push_back(basis.row(r));
  return Subspace::span(ambient, rows);
}

inline Json report_to_json(const Report& rep, const std::vector<std::string>& names = {}) {
  Json j;
  j["pass"] = rep.pass;
  Json witnesses = Json::array();
  for (const auto& w : rep.witnesses) {
    Json wj;
    wj["law"] = w.law;
    wj["where"] = w.where;
    wj["lhs"] = format_element(w.lhs, names);
    wj["rhs"] = format_element(w.rhs, names);
    witnesses.push_back(wj);
  }
  j["witnesses"] = witnesses;
  return j;
}

// ---- files -----------------------------------------------------------------

inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << canonical_dump(j);
}

inline Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("json parse error in " + path + ": " + e.what());
  }
}

inline uint64_t content_hash(const std::string& text) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace tphopf
