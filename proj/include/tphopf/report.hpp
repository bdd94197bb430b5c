#pragma once

#include <string>
#include <vector>

#include "tphopf/exactlin/rational.hpp"

namespace tphopf {

/// One violated identity: which law, at which basis indices, and both
/// evaluated sides — a machine-checkable counterexample.
struct Violation {
  std::string law;
  std::vector<int> where;
  Vec lhs;
  Vec rhs;
};

struct Report {
  bool pass = true;
  std::vector<Violation> witnesses;

  void check(const std::string& law, std::vector<int> where, Vec lhs, Vec rhs) {
    if (lhs == rhs) return;
    pass = false;
    witnesses.push_back({law, std::move(where), std::move(lhs), std::move(rhs)});
  }

  void fail(const std::string& law, std::vector<int> where, Vec lhs, Vec rhs) {
    pass = false;
    witnesses.push_back({law, std::move(where), std::move(lhs), std::move(rhs)});
  }

  void absorb(const Report& sub) {
    pass = pass && sub.pass;
    witnesses.insert(witnesses.end(), sub.witnesses.begin(), sub.witnesses.end());
  }

  bool has(const std::string& law) const {
    for (const auto& w : witnesses)
      if (w.law == law) return true;
    return false;
  }
};

/// Renders a coefficient vector against basis names, e.g. "2*x^2 - 1/2*x".
inline std::string format_element(const Vec& v, const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    std::string name = i < names.size() ? names[i] : "e" + std::to_string(i);
    if (name == "1")
      out += rational_str(c);
    else if (c == 1)
      out += name;
    else
      out += rational_str(c) + "*" + name;
  }
  return out.empty() ? "0" : out;
}

inline std::string format_witness(const Violation& w, const std::vector<std::string>& names = {}) {
  std::string s = w.law + " at (";
  for (size_t i = 0; i < w.where.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.where[i]);
  }
  s += "): lhs = " + format_element(w.lhs, names) + ", rhs = " + format_element(w.rhs, names);
  return s;
}

}  // namespace tphopf
