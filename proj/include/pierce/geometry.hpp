#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pierce/errors.hpp"
#include "pierce/scalar.hpp"

namespace pierce {

template <typename S>
struct Point2 {
  S x{};
  S y{};

  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(const S& s, const Point2& p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
};

template <typename S>
inline bool lex_less(const Point2<S>& a, const Point2<S>& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

template <typename S>
inline S cross(const Point2<S>& u, const Point2<S>& v) {
  return u.x * v.y - u.y * v.x;
}

template <typename S>
inline S dot(const Point2<S>& u, const Point2<S>& v) {
  return u.x * v.x + u.y * v.y;
}

template <typename S>
inline S norm2(const Point2<S>& p) {
  return p.x * p.x + p.y * p.y;
}

// Orientation of the triple (a, b, c): +1 left turn, -1 right turn, 0 collinear
// (within kEps in float mode, exact in rational mode).
template <typename S>
inline int orient(const Point2<S>& a, const Point2<S>& b, const Point2<S>& c) {
  return sign_of<S>(cross(b - a, c - a));
}

// A line through two anchor points. a == b encodes a degenerate point-chord;
// orientation predicates reject that case.
template <typename S>
struct Line2 {
  Point2<S> a;
  Point2<S> b;

  bool degenerate() const { return a == b; }
};

// Sign of the orientation determinant of (L.a, L.b, P). CCW convention:
// +1 is the left side of a->b.
template <typename S>
inline int side_of(const Line2<S>& L, const Point2<S>& P) {
  if (L.degenerate()) throw precondition_error("side_of: degenerate line");
  return orient(L.a, L.b, P);
}

using PointR = Point2<Rational>;
using PointD = Point2<double>;
using LineR = Line2<Rational>;
using LineD = Line2<double>;

inline PointD to_double(const PointR& p) { return {to_double(p.x), to_double(p.y)}; }
inline PointR to_rational(const PointD& p) { return {rat_from_double(p.x), rat_from_double(p.y)}; }
inline LineR to_rational(const LineD& l) { return {to_rational(l.a), to_rational(l.b)}; }
inline LineD to_double(const LineR& l) { return {to_double(l.a), to_double(l.b)}; }

// A compact convex polygon. Degenerate members are first-class:
// 1 vertex = point, 2 = segment, >=3 = strictly convex CCW polygon
// (canonical: no duplicate or collinear vertices, lexicographically
// smallest vertex first).
template <typename S>
struct ConvexSet {
  std::string id;
  std::vector<Point2<S>> vertices;

  bool is_point() const { return vertices.size() == 1; }
  bool is_segment() const { return vertices.size() == 2; }
};

using ConvexSetR = ConvexSet<Rational>;
using ConvexSetD = ConvexSet<double>;

inline ConvexSetD to_double(const ConvexSetR& s) {
  ConvexSetD out;
  out.id = s.id;
  out.vertices.reserve(s.vertices.size());
  for (const auto& v : s.vertices) out.vertices.push_back(to_double(v));
  return out;
}

// Closed containment test.
template <typename S>
inline bool point_in_convex(const ConvexSet<S>& set, const Point2<S>& p) {
  const auto& v = set.vertices;
  if (v.empty()) return false;
  if (v.size() == 1) {
    return sign_of<S>(v[0].x - p.x) == 0 && sign_of<S>(v[0].y - p.y) == 0;
  }
  if (v.size() == 2) {
    if (orient(v[0], v[1], p) != 0) return false;
    S t0 = dot(p - v[0], v[1] - v[0]);
    S t1 = dot(p - v[1], v[0] - v[1]);
    return sign_of<S>(t0) >= 0 && sign_of<S>(t1) >= 0;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    if (orient(a, b, p) < 0) return false;
  }
  return true;
}

// True iff the full line through L's anchors meets the closed set. A convex
// set meets a line exactly when its vertices do not all lie strictly on one
// side. Degenerate L (a == b) falls back to point membership.
template <typename S>
inline bool line_meets_set(const Line2<S>& L, const ConvexSet<S>& set) {
  if (set.vertices.empty()) return false;
  if (L.degenerate()) return point_in_convex(set, L.a);
  bool nonneg = false, nonpos = false;
  for (const auto& v : set.vertices) {
    int s = side_of(L, v);
    if (s >= 0) nonneg = true;
    if (s <= 0) nonpos = true;
    if (nonneg && nonpos) return true;
  }
  return false;
}

// Strict convex hull, CCW, collinear points dropped. Collinear input
// collapses to its two extremes; a single distinct point to itself.
inline std::vector<PointR> convex_hull(std::vector<PointR> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const PointR& a, const PointR& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 1) return pts;
  std::vector<PointR> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Rotate so the lexicographically smallest vertex comes first. Canonical
// form makes set equality and round-trips plain vector comparisons.
template <typename S>
inline void canonicalize_rotation(std::vector<Point2<S>>& v) {
  if (v.size() < 2) return;
  auto it = std::min_element(v.begin(), v.end(),
                             [](const Point2<S>& a, const Point2<S>& b) { return lex_less(a, b); });
  std::rotate(v.begin(), it, v.end());
}

// Builds a ConvexSet from raw input vertices. Duplicate and collinear
// interior vertices are removed; anything whose cyclic order is not convex
// (CW input, reflex turns, star orders) is rejected, not repaired.
inline ConvexSetR make_convex_set(std::string id, std::vector<PointR> verts) {
  if (verts.empty()) throw precondition_error("set '" + id + "': no vertices");

  // drop consecutive duplicates, including the wrap pair
  std::vector<PointR> v;
  for (const auto& p : verts)
    if (v.empty() || !(v.back() == p)) v.push_back(p);
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();

  if (v.size() == 1) return {std::move(id), std::move(v)};
  if (v.size() == 2) {
    if (lex_less(v[1], v[0])) std::swap(v[0], v[1]);
    return {std::move(id), std::move(v)};
  }

  // all collinear: accept a monotone sweep as a segment
  bool all_collinear = true;
  for (std::size_t i = 2; i < v.size() && all_collinear; ++i)
    if (orient(v[0], v[1], v[i]) != 0) all_collinear = false;
  if (all_collinear) {
    PointR d = v[1] - v[0];
    Rational prev(0);
    for (std::size_t i = 1; i < v.size(); ++i) {
      Rational t = dot(v[i] - v[0], d);
      if (!(t > prev)) throw precondition_error("set '" + id + "': self-intersecting vertex order");
      prev = t;
    }
    std::vector<PointR> seg{v.front(), v.back()};
    if (lex_less(seg[1], seg[0])) std::swap(seg[0], seg[1]);
    return {std::move(id), std::move(seg)};
  }

  // strip collinear interior vertices; a collinear triple whose middle point
  // is not between its neighbors means the order backtracks
  for (bool changed = true; changed && v.size() > 2;) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const PointR& a = v[(i + v.size() - 1) % v.size()];
      const PointR& m = v[i];
      const PointR& b = v[(i + 1) % v.size()];
      if (orient(a, b, m) == 0) {
        if (sgn(dot(m - a, b - a)) < 0 || sgn(dot(m - b, a - b)) < 0)
          throw precondition_error("set '" + id + "': self-intersecting vertex order");
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  int pos = 0, neg = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int o = orient(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]);
    (o > 0 ? pos : neg)++;
  }
  if (neg == static_cast<int>(v.size()))
    throw precondition_error("set '" + id + "': vertices must be CCW");
  if (neg > 0) throw precondition_error("set '" + id + "': vertex order is not convex");

  // star orders (all-left turns wrapping more than once) disagree with the hull
  std::vector<PointR> hull = convex_hull(v);
  if (hull.size() != v.size())
    throw precondition_error("set '" + id + "': self-intersecting vertex order");
  canonicalize_rotation(v);
  canonicalize_rotation(hull);
  if (!(hull == v)) throw precondition_error("set '" + id + "': self-intersecting vertex order");

  return {std::move(id), std::move(v)};
}

namespace detail {

// Clip the segment u + t(v-u), t in [tlo,thi], by cross(e, p - base) >= 0.
inline bool clip_param(const PointR& u, const PointR& v, const PointR& base, const PointR& e,
                       Rational& tlo, Rational& thi) {
  Rational a = cross(e, u - base);
  Rational b = cross(e, v - u);
  if (sgn(b) == 0) return sgn(a) >= 0;
  Rational t = -a / b;
  if (sgn(b) > 0)
    tlo = std::max(tlo, t);
  else
    thi = std::min(thi, t);
  return tlo <= thi;
}

inline std::optional<ConvexSetR> intersect_segment_segment(const ConvexSetR& A,
                                                           const ConvexSetR& B,
                                                           std::string id) {
  const PointR &p = A.vertices[0], &q = A.vertices[1];
  const PointR &r = B.vertices[0], &s = B.vertices[1];
  PointR d1 = q - p, d2 = s - r;
  Rational den = cross(d1, d2);
  if (sgn(den) != 0) {
    Rational t = cross(r - p, d2) / den;
    Rational u = cross(r - p, d1) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    return make_convex_set(std::move(id), {p + t * d1});
  }
  if (sgn(cross(d1, r - p)) != 0) return std::nullopt;  // parallel, not collinear
  // collinear: overlap by parameter along d1
  Rational len2 = dot(d1, d1);
  Rational t0 = dot(r - p, d1) / len2;
  Rational t1 = dot(s - p, d1) / len2;
  if (t0 > t1) std::swap(t0, t1);
  Rational lo = std::max(Rational(0), t0), hi = std::min(Rational(1), t1);
  if (lo > hi) return std::nullopt;
  if (lo == hi) return make_convex_set(std::move(id), {p + lo * d1});
  return make_convex_set(std::move(id), {p + lo * d1, p + hi * d1});
}

inline std::optional<ConvexSetR> intersect_segment_polygon(const ConvexSetR& seg,
                                                           const ConvexSetR& poly,
                                                           std::string id) {
  const PointR &u = seg.vertices[0], &v = seg.vertices[1];
  Rational tlo(0), thi(1);
  const auto& w = poly.vertices;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!clip_param(u, v, w[i], w[(i + 1) % w.size()] - w[i], tlo, thi)) return std::nullopt;
  }
  PointR a = u + tlo * (v - u), b = u + thi * (v - u);
  if (a == b) return make_convex_set(std::move(id), {a});
  return make_convex_set(std::move(id), {a, b});
}

// Sutherland-Hodgman, closed (boundary kept).
inline std::vector<PointR> clip_polygon_halfplane(const std::vector<PointR>& poly,
                                                  const PointR& base, const PointR& e) {
  std::vector<PointR> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PointR& cur = poly[i];
    const PointR& nxt = poly[(i + 1) % n];
    Rational sc = cross(e, cur - base);
    Rational sn = cross(e, nxt - base);
    if (sgn(sc) >= 0) out.push_back(cur);
    if ((sgn(sc) > 0 && sgn(sn) < 0) || (sgn(sc) < 0 && sgn(sn) > 0)) {
      Rational t = sc / (sc - sn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  return out;
}

}  // namespace detail

// Exact intersection. Returns nullopt for an empty intersection; the result
// is canonical, so equal point sets compare equal vertex-wise.
inline std::optional<ConvexSetR> intersect_convex(const ConvexSetR& A, const ConvexSetR& B,
                                                  std::string id = "") {
  if (id.empty()) id = A.id + "&" + B.id;
  if (A.vertices.empty() || B.vertices.empty()) return std::nullopt;
  if (A.is_point()) {
    if (point_in_convex(B, A.vertices[0])) return make_convex_set(std::move(id), A.vertices);
    return std::nullopt;
  }
  if (B.is_point()) return intersect_convex(B, A, std::move(id));
  if (A.is_segment() && B.is_segment())
    return detail::intersect_segment_segment(A, B, std::move(id));
  if (A.is_segment()) return detail::intersect_segment_polygon(A, B, std::move(id));
  if (B.is_segment()) return detail::intersect_segment_polygon(B, A, std::move(id));

  std::vector<PointR> poly = A.vertices;
  const auto& w = B.vertices;
  for (std::size_t i = 0; i < w.size() && !poly.empty(); ++i)
    poly = detail::clip_polygon_halfplane(poly, w[i], w[(i + 1) % w.size()] - w[i]);
  if (poly.empty()) return std::nullopt;
  std::vector<PointR> hull = convex_hull(poly);
  return make_convex_set(std::move(id), std::move(hull));
}

}  // namespace pierce
