#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pierce/family.hpp"

namespace pierce {

// A point of the standard simplex: nonnegative coordinates summing to 1
// (exactly in rational mode, within kEps in float mode).
template <typename S>
struct SimplexPoint {
  std::vector<S> coords;
};

using SimplexPointR = SimplexPoint<Rational>;
using SimplexPointD = SimplexPoint<double>;

template <typename S>
inline void check_simplex(const SimplexPoint<S>& x) {
  S sum(0);
  for (const auto& c : x.coords) {
    if (sign_of<S>(c) < 0) throw precondition_error("simplex coordinate is negative");
    sum += c;
  }
  if (sign_of<S>(sum - S(1)) != 0)
    throw precondition_error("simplex coordinates must sum to 1");
}

// Region label: value in [1, m], or 0 marking a point on some chord.
struct RegionIndex {
  int value = 0;
  bool on_line() const { return value == 0; }
  friend bool operator==(RegionIndex a, RegionIndex b) { return a.value == b.value; }
  friend bool operator!=(RegionIndex a, RegionIndex b) { return a.value != b.value; }
};
inline constexpr RegionIndex kOnL{0};

// m boundary points on the unit circle at cumulative parameters of x, and
// the m/2 chords pairing index i with i+m/2. Chords with coincident
// endpoints are degenerate point-chords.
template <typename S>
struct ChordSystem {
  int m = 0;
  std::vector<S> x;               // simplex coordinates, size m
  std::vector<S> t;               // cumulative parameters, size m+1; t[0]=0, t[m]=1
  std::vector<Point2<S>> f;       // boundary points, size m
  std::vector<Line2<S>> chords;   // size m/2; chord i joins f[i] and f[i+m/2]
};

inline PointD circle_point(double t) {
  const double th = 2.0 * std::numbers::pi * t;
  return {std::cos(th), std::sin(th)};
}

// Rational point exactly on the unit circle near angle 2*pi*t: stereographic
// u = tan(pi*t) rounded to a dyadic with 24 fractional bits, mapped through
// ((1-u^2)/(1+u^2), 2u/(1+u^2)). The rounding keeps the map monotone in t
// and lands the quadrant parameters 0, 1/4, 1/2, 3/4 exactly on (1,0),
// (0,1), (-1,0), (0,-1); the antipode branch covers t in [1/2, 1].
inline PointR circle_point(Rational t) {
  if (t < 0 || t > 1) throw precondition_error("circle_point: parameter outside [0,1]");
  bool flip = false;
  const Rational half(1, 2);
  while (t >= half) {
    t -= half;
    flip = !flip;
  }
  const double ud = std::tan(std::numbers::pi * to_double(t));
  const long scale = 1L << 24;
  Rational q = rat_from_double(ud) * scale + half;
  mpz_class num = q.get_num(), den = q.get_den(), fl;
  mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rational u(fl, mpz_class(scale));
  u.canonicalize();
  const Rational u2 = u * u;
  PointR p{(1 - u2) / (1 + u2), (2 * u) / (1 + u2)};
  if (flip) p = {-p.x, -p.y};
  return p;
}

template <typename S>
inline ChordSystem<S> chord_system(const SimplexPoint<S>& x) {
  check_simplex(x);
  const int m = static_cast<int>(x.coords.size());
  if (m < 2 || m % 2 != 0)
    throw precondition_error("chord_system: coordinate count must be even and >= 2");
  ChordSystem<S> cs;
  cs.m = m;
  cs.x = x.coords;
  cs.t.resize(m + 1);
  cs.t[0] = S(0);
  for (int i = 1; i <= m; ++i) cs.t[i] = cs.t[i - 1] + x.coords[i - 1];
  cs.f.reserve(m);
  for (int i = 0; i < m; ++i) cs.f.push_back(circle_point(cs.t[i]));
  const int h = m / 2;
  cs.chords.reserve(h);
  for (int i = 0; i < h; ++i) cs.chords.push_back({cs.f[i], cs.f[i + h]});
  return cs;
}

template <typename S>
inline bool point_on_chords(const Point2<S>& P, const ChordSystem<S>& cs) {
  for (const auto& c : cs.chords) {
    if (c.degenerate()) {
      if (sign_of<S>(P.x - c.a.x) == 0 && sign_of<S>(P.y - c.a.y) == 0) return true;
    } else if (side_of(c, P) == 0) {
      return true;
    }
  }
  return false;
}

// Open-region membership P in P_i: strictly on the arc-side of both bounding
// chords, the arc-side being the one holding the arc's midpoint. Degenerate
// bounding chords impose no constraint; a midpoint landing on a bounding
// chord line means the realized arc is collapsed and P_i is empty, as is any
// P_i with x_i = 0.
template <typename S>
inline bool in_open_region(const Point2<S>& P, const ChordSystem<S>& cs, int i) {
  if (sign_of<S>(cs.x[i - 1]) <= 0) return false;
  const int h = cs.m / 2;
  const S mid = cs.t[i - 1] + (cs.t[i] - cs.t[i - 1]) / S(2);
  const Point2<S> g = circle_point(mid);
  const Line2<S>* bounds[2] = {&cs.chords[(i - 1) % h], &cs.chords[i % h]};
  for (const Line2<S>* c : bounds) {
    if (c->degenerate()) continue;
    const int sg = side_of(*c, g);
    if (sg == 0) return false;
    if (side_of(*c, P) != sg) return false;
  }
  return true;
}

// Label of the region holding P: 0 (ON_L) on a chord, else the unique i with
// P in R_i. The T_i recursion telescopes to min{ i : P in P_i }, which is
// what we evaluate; region_index_recursive below is the literal recursion,
// kept for cross-checking. The final ON_L fallback is unreachable in exact
// mode (the regions and chords cover the disk) and conservative in float
// mode.
template <typename S>
inline RegionIndex region_index(const Point2<S>& P, const ChordSystem<S>& cs) {
  if (sign_of<S>(norm2(P) - S(1)) >= 0)
    throw precondition_error("region_index: point not strictly inside the unit disk");
  if (point_on_chords(P, cs)) return kOnL;
  for (int i = 1; i <= cs.m; ++i)
    if (in_open_region(P, cs, i)) return RegionIndex{i};
  return kOnL;
}

template <typename S>
inline RegionIndex region_index_recursive(const Point2<S>& P, const ChordSystem<S>& cs) {
  if (sign_of<S>(norm2(P) - S(1)) >= 0)
    throw precondition_error("region_index: point not strictly inside the unit disk");
  if (point_on_chords(P, cs)) return kOnL;
  std::vector<int> memo(cs.m + 1, -1);
  auto in_t = [&](auto&& self, int i) -> bool {
    if (memo[i] >= 0) return memo[i] != 0;
    bool r = in_open_region(P, cs, i);
    for (int j = 1; j < i && r; ++j)
      if (self(self, j)) r = false;
    memo[i] = r ? 1 : 0;
    return r;
  };
  for (int i = 1; i <= cs.m; ++i)
    if (in_t(in_t, i)) return RegionIndex{i};
  return kOnL;
}

template <typename S>
inline bool chord_meets_set(const Line2<S>& chord, const ConvexSet<S>& set) {
  if (chord.degenerate()) return point_in_convex(set, chord.a);
  return line_meets_set(chord, set);
}

// KKM cover label. NONE means every set meets the chord union L(x), i.e.
// the chords are a line transversal; otherwise the smallest i whose region
// R_i(x) wholly contains some set, witnessed by the first such set in
// family order. Sets are connected and chord-disjoint here, so one vertex's
// region label is the whole set's.
template <typename S>
inline std::optional<std::pair<int, std::string>> cover_label(const SimplexPoint<S>& x,
                                                              const Family<S>& family) {
  for (const auto& s : family.sets)
    for (const auto& v : s.vertices)
      if (sign_of<S>(norm2(v) - S(1)) >= 0)
        throw precondition_error("cover_label: family not normalized to the open unit disk");
  const ChordSystem<S> cs = chord_system(x);
  int best = std::numeric_limits<int>::max();
  const std::string* witness = nullptr;
  for (const auto& s : family.sets) {
    bool pierced = false;
    for (const auto& c : cs.chords)
      if (chord_meets_set(c, s)) {
        pierced = true;
        break;
      }
    if (pierced) continue;
    RegionIndex r = region_index(s.vertices[0], cs);
    if (r.on_line()) continue;  // float-mode guard; cannot happen in exact mode
    if (r.value < best) {
      best = r.value;
      witness = &s.id;
    }
  }
  if (witness == nullptr) return std::nullopt;
  return std::make_pair(best, *witness);
}

}  // namespace pierce
