#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "tphopf/errors.hpp"

namespace tphopf {

// Exact scalars over the prime field of characteristic 0.  cpp_rational keeps
// the canonical form (gcd-reduced, denominator > 0) on every operation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  return Rational(num) / Rational(den);
}

/// Canonical text form: "p/q", or just "p" when q = 1.
inline std::string rational_str(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

/// Parses "p", "p/q", "-p/q"; the result is normalized ("2/4" becomes 1/2).
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return ParseError("bad rational literal: '" + std::string(text) + "'"); };
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw bad();
  text = text.substr(begin, end - begin + 1);

  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return Integer(std::string(part));
  };

  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return make_rational(num, den);
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }

inline Vec unit_vec(int n, int i) {
  Vec v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = 1;
  return v;
}

inline Vec& add_scaled(Vec& target, const Rational& c, const Vec& src) {
  if (target.size() != src.size()) throw ShapeError("vector length mismatch");
  if (c != 0)
    for (size_t i = 0; i < src.size(); ++i) target[i] += c * src[i];
  return target;
}

inline Vec vec_add(Vec a, const Vec& b) {
  add_scaled(a, 1, b);
  return a;
}

inline Vec vec_sub(Vec a, const Vec& b) {
  add_scaled(a, -1, b);
  return a;
}

inline Vec vec_scale(Vec a, const Rational& c) {
  for (auto& x : a) x *= c;
  return a;
}

}  // namespace tphopf
