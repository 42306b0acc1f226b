#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "pierce/geometry.hpp"

namespace pierce {

// Uniform scale + translation, no rotation: p |-> scale*p + shift.
template <typename S>
struct Similarity {
  S scale{1};
  Point2<S> shift{S(0), S(0)};

  Point2<S> apply(const Point2<S>& p) const { return {scale * p.x + shift.x, scale * p.y + shift.y}; }
  Point2<S> invert(const Point2<S>& p) const {
    return {(p.x - shift.x) / scale, (p.y - shift.y) / scale};
  }
  Line2<S> invert(const Line2<S>& l) const { return {invert(l.a), invert(l.b)}; }
  // this ∘ other
  Similarity compose(const Similarity& other) const {
    return {scale * other.scale,
            {scale * other.shift.x + shift.x, scale * other.shift.y + shift.y}};
  }
};

template <typename S>
struct Family {
  std::vector<ConvexSet<S>> sets;
  std::map<std::string, int> colors;  // empty = uncolored
  Similarity<S> transform;            // original -> current coordinates

  const ConvexSet<S>* find(const std::string& id) const {
    for (const auto& s : sets)
      if (s.id == id) return &s;
    return nullptr;
  }
};

using FamilyR = Family<Rational>;
using FamilyD = Family<double>;

inline FamilyD to_double(const FamilyR& f) {
  FamilyD out;
  out.sets.reserve(f.sets.size());
  for (const auto& s : f.sets) out.sets.push_back(to_double(s));
  out.colors = f.colors;
  out.transform.scale = to_double(f.transform.scale);
  out.transform.shift = to_double(f.transform.shift);
  return out;
}

namespace detail {
inline Rational sqrt_upper(const Rational& v) { return rat_sqrt_upper(v); }
inline double sqrt_upper(double v) { return std::sqrt(v) * (1.0 + 1e-12); }
}  // namespace detail

// Similarity-map the family so every vertex has norm <= 1 - margin. Already-
// fitting families pass through unchanged. The applied map is composed into
// the returned family's transform so outputs can be carried back to original
// coordinates.
template <typename S>
inline Family<S> normalize_to_disk(const Family<S>& family, const S& margin) {
  if (family.sets.empty()) throw precondition_error("normalize_to_disk: empty family");
  if (!(margin > S(0)) || !(margin < S(1)))
    throw precondition_error("normalize_to_disk: margin must be in (0,1)");

  const S target = S(1) - margin;
  bool inside = true;
  for (const auto& s : family.sets)
    for (const auto& p : s.vertices)
      if (norm2(p) > target * target) {
        inside = false;
        break;
      }
  if (inside) return family;

  Point2<S> lo = family.sets[0].vertices[0], hi = lo;
  for (const auto& s : family.sets)
    for (const auto& p : s.vertices) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
    }
  Point2<S> c{(lo.x + hi.x) / S(2), (lo.y + hi.y) / S(2)};
  S rmax2(0);
  for (const auto& s : family.sets)
    for (const auto& p : s.vertices) rmax2 = std::max(rmax2, norm2(p - c));

  Similarity<S> map;
  if (sign_of<S>(rmax2) == 0) {
    map = {S(1), {-c.x, -c.y}};
  } else {
    S ub = detail::sqrt_upper(rmax2);
    S sc = target / ub;
    map = {sc, {-(sc * c.x), -(sc * c.y)}};
  }

  Family<S> out;
  out.colors = family.colors;
  out.transform = map.compose(family.transform);
  out.sets.reserve(family.sets.size());
  for (const auto& s : family.sets) {
    ConvexSet<S> t{s.id, {}};
    t.vertices.reserve(s.vertices.size());
    for (const auto& p : s.vertices) t.vertices.push_back(map.apply(p));
    out.sets.push_back(std::move(t));
  }
  return out;
}

}  // namespace pierce
