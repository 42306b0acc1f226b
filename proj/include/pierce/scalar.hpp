#pragma once

#include <cmath>
#include <type_traits>

#include "pierce/rational.hpp"

namespace pierce {

// Float predicates use one global tolerance; exact mode tolerates nothing.
inline constexpr double kEps = 1e-9;

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  // |v| <= kEps collapses to zero: conservative toward "on the line".
  static int sign(double v) {
    if (v > kEps) return 1;
    if (v < -kEps) return -1;
    return 0;
  }
  static double from_rational(const Rational& r) { return to_double(r); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static int sign(const Rational& v) { return sgn(v); }
  static Rational from_rational(const Rational& r) { return r; }
};

template <typename S>
inline int sign_of(const S& v) {
  return scalar_traits<S>::sign(v);
}

}  // namespace pierce
