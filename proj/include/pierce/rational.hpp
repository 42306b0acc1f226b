#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "pierce/errors.hpp"

namespace pierce {

// Exact arithmetic scalar. All certificates, oracles and verification run on
// this type; doubles are used only for searching and rendering.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw precondition_error("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Lossless: every finite double is a dyadic rational.
inline Rational rat_from_double(double v) { return Rational(v); }

inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

// Accepts "p/q", integer strings, and decimal/scientific literals.
// Decimal strings parse exactly as p * 10^e (so "0.1" is 1/10, not the
// nearest double).
inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw io_error("empty number literal");
  if (s.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw io_error("bad rational literal: " + s);
    if (r.get_den() == 0) throw io_error("zero denominator: " + s);
    r.canonicalize();
    return r;
  }
  // decimal / scientific
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i] == '-'), ++i;
  std::string digits;
  long frac_digits = 0;
  bool any = false, dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (dot) throw io_error("bad number literal: " + s);
      dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (dot) ++frac_digits;
      any = true;
    } else {
      break;
    }
  }
  if (!any) throw io_error("bad number literal: " + s);
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    char* end = nullptr;
    exp10 = std::strtol(s.c_str() + i, &end, 10);
    if (end != s.c_str() + s.size()) throw io_error("bad exponent: " + s);
  } else if (i != s.size()) {
    throw io_error("bad number literal: " + s);
  }
  mpz_class mant(digits.empty() ? "0" : digits, 10);  // explicit base: no octal surprises
  Rational r(mant);
  long e = exp10 - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0)
    r *= Rational(pow10);
  else
    r /= Rational(pow10);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

// Canonical "p/q" (or plain "p") form; round-trips exactly through
// rat_from_string.
inline std::string rat_to_string(const Rational& v) { return v.get_str(); }

// Smallest-effort rational q with q >= sqrt(v), v >= 0. Used to bound norms
// when only an upper estimate is needed (disk normalization).
inline Rational rat_sqrt_upper(const Rational& v) {
  if (sgn(v) < 0) throw precondition_error("rat_sqrt_upper of negative value");
  if (sgn(v) == 0) return Rational(0);
  double guess = std::sqrt(to_double(v));
  Rational q = rat_from_double(guess * (1.0 + 1e-12) + 1e-300);
  const Rational bump(1048577, 1048576);  // 1 + 2^-20
  while (q * q < v) q *= bump;
  return q;
}

}  // namespace pierce
