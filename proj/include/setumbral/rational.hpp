#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "setumbral/error.hpp"

namespace setumbral {

// The scalar field. Values are kept canonical (gcd(p, q) = 1, q > 0).
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str(10);
}

// Accepts [+-]digits or [+-]digits/digits; rejects zero denominators.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  auto digits = [&](std::size_t from) {
    std::size_t i = from;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    return i;
  };
  std::size_t end = digits(pos);
  if (end == pos) throw parse_error("not a rational literal: '" + s + "'");
  bool has_den = false;
  if (end < s.size()) {
    if (s[end] != '/') throw parse_error("not a rational literal: '" + s + "'");
    std::size_t den_end = digits(end + 1);
    if (den_end == end + 1 || den_end != s.size()) {
      throw parse_error("not a rational literal: '" + s + "'");
    }
    has_den = true;
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (has_den) {
    std::size_t slash = s.find('/');
    Integer den(s.substr(slash + 1), 10);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    r = Rational(Integer(s.substr(0, slash), 10), den);
  } else {
    r = Rational(Integer(s, 10));
  }
  r.canonicalize();
  return r;
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

inline Rational factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(out);
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace setumbral
