#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "pierce/config_space.hpp"
#include "pierce/family.hpp"
#include "pierce/matching.hpp"

namespace pierce {

// Edges of the regular (2p+1)-gon with unit circumradius, first vertex at
// angle 0, as 2p+1 exact segments. Vertices come from the rational circle
// map (a Pythagorean-dyadic snap of the true angles); all vertices stay
// exactly on the circle and in convex position, so the combinatorics —
// adjacent edges share a vertex, non-adjacent edges are disjoint, nu = p —
// survive the snap.
inline FamilyR regular_gon_edges(int p) {
  if (p < 1) throw precondition_error("regular_gon_edges: p must be >= 1");
  const int n = 2 * p + 1;
  std::vector<PointR> verts;
  verts.reserve(n);
  for (int i = 0; i < n; ++i) verts.push_back(circle_point(rat(i, n)));
  FamilyR f;
  for (int i = 0; i < n; ++i) {
    f.sets.push_back(
        make_convex_set("e" + std::to_string(i), {verts[i], verts[(i + 1) % n]}));
  }
  return f;
}

struct RandomFamilyParams {
  int n = 5;
  int min_vertices = 3;
  int max_vertices = 8;
  long center_range = 1;  // centers in [-range, range]^2
  Rational radius_min = rat(1, 4);
  Rational radius_max = rat(7, 10);
  enum class Filter { none, no_isolated, pairwise, rainbow } filter = Filter::none;
  int color_classes = 0;  // rainbow: number of families (even, >= 2)
  int retry_budget = 400;
};

namespace detail {

inline Rational centroid_x(const ConvexSetR& s) {
  Rational sum(0);
  for (const auto& v : s.vertices) sum += v.x;
  return sum / static_cast<long>(s.vertices.size());
}
inline Rational centroid_y(const ConvexSetR& s) {
  Rational sum(0);
  for (const auto& v : s.vertices) sum += v.y;
  return sum / static_cast<long>(s.vertices.size());
}

// One random cyclic polygon: distinct sorted angles on a circle of random
// radius. Points on a circle are strictly convex, so validation never
// trips.
inline ConvexSetR random_polygon(std::mt19937_64& rng, const std::string& id,
                                 const RandomFamilyParams& par) {
  const long den = 1L << 12;
  std::uniform_int_distribution<long> cdist(-par.center_range * den, par.center_range * den);
  PointR center{rat(cdist(rng), den), rat(cdist(rng), den)};
  std::uniform_int_distribution<long> rdist(0, den);
  Rational radius =
      par.radius_min + (par.radius_max - par.radius_min) * rat(rdist(rng), den);
  std::uniform_int_distribution<int> nv(par.min_vertices, par.max_vertices);
  const int want = nv(rng);
  std::uniform_int_distribution<long> adist(0, 1023);
  std::vector<long> ticks;
  while (static_cast<int>(ticks.size()) < want) {
    long a = adist(rng);
    bool dup = false;
    for (long t : ticks)
      if (t == a) dup = true;
    if (!dup) ticks.push_back(a);
  }
  std::sort(ticks.begin(), ticks.end());
  std::vector<PointR> verts;
  verts.reserve(want);
  for (long t : ticks) {
    PointR u = circle_point(rat(t, 1024));
    verts.push_back({center.x + radius * u.x, center.y + radius * u.y});
  }
  return make_convex_set(id, std::move(verts));
}

}  // namespace detail

// Reproducible random families. Filters:
//   no_isolated — a centroid-to-centroid segment is added per isolated set;
//   pairwise    — sets are resampled until each meets all earlier ones;
//   rainbow     — round-robin colors; classes 0 and 1 are recentered on the
//                 origin, so every cross selection from them intersects and
//                 the rainbow condition holds by construction.
inline FamilyR random_family(unsigned long seed, const RandomFamilyParams& par = {}) {
  if (par.n < 1) throw precondition_error("random_family: n must be >= 1");
  using Filter = RandomFamilyParams::Filter;
  if (par.filter == Filter::rainbow) {
    if (par.color_classes < 2 || par.color_classes % 2 != 0)
      throw precondition_error("random_family: rainbow needs an even class count >= 2");
    if (par.n < par.color_classes)
      throw precondition_error("random_family: fewer sets than color classes");
  }
  std::mt19937_64 rng(seed);
  FamilyR f;

  for (int i = 0; i < par.n; ++i) {
    std::string id = "s" + std::to_string(i);
    if (par.filter == Filter::pairwise) {
      bool placed = false;
      for (int attempt = 0; attempt < par.retry_budget && !placed; ++attempt) {
        ConvexSetR c = detail::random_polygon(rng, id, par);
        bool ok = true;
        for (const auto& prev : f.sets)
          if (!intersect_convex(prev, c).has_value()) {
            ok = false;
            break;
          }
        if (ok) {
          f.sets.push_back(std::move(c));
          placed = true;
        }
      }
      if (!placed)
        throw budget_error("random_family: pairwise filter unsatisfiable within retry budget");
    } else {
      f.sets.push_back(detail::random_polygon(rng, id, par));
    }
  }

  if (par.filter == Filter::no_isolated && par.n >= 2) {
    std::vector<std::string> iso = isolated_sets(f);
    int linkno = 0;
    for (const auto& id : iso) {
      int idx = -1;
      for (int i = 0; i < par.n; ++i)
        if (f.sets[i].id == id) idx = i;
      const ConvexSetR& a = f.sets[idx];
      const ConvexSetR& b = f.sets[(idx + 1) % par.n];
      PointR pa{detail::centroid_x(a), detail::centroid_y(a)};
      PointR pb{detail::centroid_x(b), detail::centroid_y(b)};
      f.sets.push_back(make_convex_set("link" + std::to_string(linkno++), {pa, pb}));
    }
    if (!isolated_sets(f).empty())
      throw budget_error("random_family: no-isolated filter failed (internal)");
  }

  if (par.filter == Filter::rainbow) {
    for (int i = 0; i < par.n; ++i) {
      int color = i % par.color_classes;
      f.colors[f.sets[i].id] = color;
      if (color <= 1) {
        // recenter on the origin: the polygon contains its centroid
        Rational cx = detail::centroid_x(f.sets[i]), cy = detail::centroid_y(f.sets[i]);
        for (auto& v : f.sets[i].vertices) v = {v.x - cx, v.y - cy};
      }
    }
  }
  return f;
}

}  // namespace pierce
