#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pierce/family.hpp"
#include "pierce/geometry.hpp"
#include "pierce/independent_set.hpp"
#include "pierce/set_cover.hpp"

namespace pierce {

// Closed 1-D interval in a line's parameterization.
struct Interval {
  Rational lo, hi;
  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

// Trace of one set on a fixed line system: one closed interval (or EMPTY)
// per line. Lines are parameterized affinely by their anchors,
// p(t) = a + t(b-a); piercing structure is invariant under this
// reparameterization, and unit-spaced anchors make t the euclidean
// coordinate.
struct MultiInterval {
  std::string owner;
  std::vector<std::optional<Interval>> components;

  bool all_empty() const {
    for (const auto& c : components)
      if (c) return false;
    return true;
  }
};

// A point on line `line` at parameter t.
struct LinePoint {
  int line = 0;
  Rational t;
};

struct PointTransversal {
  std::vector<PointR> points;
  std::map<std::string, int> assignment;  // set id -> index into points
};

namespace detail {

// Exact trace of a convex set on the line a + t(b-a): a closed t-interval
// or nothing.
inline std::optional<Interval> trace_one(const LineR& L, const ConvexSetR& S) {
  const PointR d = L.b - L.a;
  const Rational dd = dot(d, d);
  auto param = [&](const PointR& p) { return Rational(dot(p - L.a, d) / dd); };

  const auto& v = S.vertices;
  if (v.size() == 1) {
    if (sgn(cross(d, v[0] - L.a)) != 0) return std::nullopt;
    Rational t = param(v[0]);
    return Interval{t, t};
  }
  if (v.size() == 2) {
    const PointR e = v[1] - v[0];
    const Rational den = cross(d, e);
    if (sgn(den) == 0) {
      if (sgn(cross(d, v[0] - L.a)) != 0) return std::nullopt;  // parallel off the line
      Rational t0 = param(v[0]), t1 = param(v[1]);
      if (t0 > t1) std::swap(t0, t1);
      return Interval{t0, t1};
    }
    const Rational s = cross(d, L.a - v[0]) / den;
    if (s < 0 || s > 1) return std::nullopt;
    Rational t = param(v[0] + s * e);
    return Interval{t, t};
  }
  // polygon: clip the line parameter by each edge halfplane
  bool has_lo = false, has_hi = false;
  Rational tlo(0), thi(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const PointR base = v[i];
    const PointR e = v[(i + 1) % v.size()] - base;
    // cross(e, a + t d - base) >= 0  <=>  c0 + t c1 >= 0
    const Rational c0 = cross(e, L.a - base);
    const Rational c1 = cross(e, d);
    if (sgn(c1) == 0) {
      if (sgn(c0) < 0) return std::nullopt;
      continue;
    }
    const Rational t = -c0 / c1;
    if (sgn(c1) > 0) {
      if (!has_lo || t > tlo) tlo = t, has_lo = true;
    } else {
      if (!has_hi || t < thi) thi = t, has_hi = true;
    }
  }
  // a compact polygon bounds the trace in both directions whenever it's hit
  if (!has_lo || !has_hi || tlo > thi) return std::nullopt;
  return Interval{tlo, thi};
}

}  // namespace detail

inline std::vector<MultiInterval> trace_on_lines(const FamilyR& family,
                                                 const std::vector<LineR>& lines) {
  if (lines.empty()) throw precondition_error("trace_on_lines: no lines");
  for (const auto& L : lines)
    if (L.degenerate()) throw precondition_error("trace_on_lines: degenerate line");
  std::vector<MultiInterval> out;
  out.reserve(family.sets.size());
  for (const auto& s : family.sets) {
    MultiInterval mi;
    mi.owner = s.id;
    mi.components.reserve(lines.size());
    for (const auto& L : lines) mi.components.push_back(detail::trace_one(L, s));
    out.push_back(std::move(mi));
  }
  return out;
}

struct GallaiResult {
  std::vector<Rational> points;               // increasing
  std::map<std::string, int> assignment;      // interval id -> point index
  std::vector<std::string> disjoint_witness;  // |points| pairwise disjoint intervals:
                                              // certifies tau = nu = |points|
};

// Classical right-endpoint sweep: sort by right endpoint, pick the smallest
// right endpoint not yet covered. The picked intervals are pairwise
// disjoint, so |points| <= nu <= tau <= |points|: the result is a minimum
// piercing set and tau = nu, certified by the returned witness.
inline GallaiResult gallai_pierce(const std::vector<std::pair<std::string, Interval>>& intervals) {
  std::vector<int> order(intervals.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Interval &A = intervals[a].second, &B = intervals[b].second;
    if (A.hi != B.hi) return A.hi < B.hi;
    if (A.lo != B.lo) return A.lo < B.lo;
    return intervals[a].first < intervals[b].first;
  });
  GallaiResult r;
  for (int idx : order) {
    const auto& [id, iv] = intervals[idx];
    if (!r.points.empty() && iv.contains(r.points.back())) {
      r.assignment[id] = static_cast<int>(r.points.size()) - 1;
      continue;
    }
    r.points.push_back(iv.hi);
    r.assignment[id] = static_cast<int>(r.points.size()) - 1;
    r.disjoint_witness.push_back(id);
  }
  return r;
}

struct DIntervalPiercing {
  std::vector<LinePoint> points;
  std::map<std::string, int> assignment;  // owner -> index into points
  int nu = 0;                             // exact matching number of the family
  long bound = 0;                         // (d^2-d)*nu for d >= 2, nu for d = 1
  bool bound_satisfied = false;
};

// Exact matching number of a d-interval family: independence number of its
// overlap graph.
inline int d_interval_matching_number(const std::vector<MultiInterval>& mi,
                                      long budget = kDefaultMisBudget) {
  const int n = static_cast<int>(mi.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool meet = false;
      const std::size_t d = mi[i].components.size();
      for (std::size_t l = 0; l < d && !meet; ++l)
        if (mi[i].components[l] && mi[j].components[l] &&
            mi[i].components[l]->overlaps(*mi[j].components[l]))
          meet = true;
      adj[i][j] = adj[j][i] = meet;
    }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return independent_set_size(adj, all, budget);
}

// Exact minimum point piercing of a d-interval family. Candidates are the
// right endpoints of all nonempty components: any piercing point q on line l
// can slide right to min{ hi of components on l containing q } — every
// component containing q reaches at least that far right, so coverage only
// grows. Minimality then comes from exact set cover over the candidates.
inline DIntervalPiercing pierce_d_intervals(const std::vector<MultiInterval>& mi,
                                            long cover_budget = kDefaultCoverBudget,
                                            long mis_budget = kDefaultMisBudget) {
  if (mi.empty()) return {};
  const int d = static_cast<int>(mi[0].components.size());
  if (d < 1) throw precondition_error("pierce_d_intervals: no lines");
  for (const auto& m : mi) {
    if (static_cast<int>(m.components.size()) != d)
      throw precondition_error("pierce_d_intervals: ragged component counts");
    if (m.all_empty())
      throw precondition_error("pierce_d_intervals: '" + m.owner + "' has no nonempty component");
  }

  DIntervalPiercing out;
  if (d == 1) {
    std::vector<std::pair<std::string, Interval>> iv;
    for (const auto& m : mi) iv.emplace_back(m.owner, *m.components[0]);
    GallaiResult g = gallai_pierce(iv);
    for (const auto& t : g.points) out.points.push_back({0, t});
    out.assignment = g.assignment;
    out.nu = static_cast<int>(g.points.size());  // tau = nu for intervals, certified
    out.bound = out.nu;
    out.bound_satisfied = static_cast<long>(out.points.size()) <= out.bound;
    return out;
  }

  std::vector<LinePoint> cands;
  for (const auto& m : mi)
    for (int l = 0; l < d; ++l)
      if (m.components[l]) cands.push_back({l, m.components[l]->hi});
  std::sort(cands.begin(), cands.end(), [](const LinePoint& a, const LinePoint& b) {
    if (a.line != b.line) return a.line < b.line;
    return a.t < b.t;
  });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const LinePoint& a, const LinePoint& b) {
                            return a.line == b.line && a.t == b.t;
                          }),
              cands.end());

  const int n = static_cast<int>(mi.size());
  std::vector<CoverMask> masks;
  masks.reserve(cands.size());
  for (const auto& c : cands) {
    CoverMask m = make_mask(n);
    for (int i = 0; i < n; ++i)
      if (mi[i].components[c.line] && mi[i].components[c.line]->contains(c.t)) mask_set(m, i);
    masks.push_back(std::move(m));
  }
  auto cover = min_set_cover(n, masks, n, cover_budget);
  if (!cover) throw precondition_error("pierce_d_intervals: uncoverable input");

  for (int ci : *cover) out.points.push_back(cands[ci]);
  for (int i = 0; i < n; ++i)
    for (std::size_t pi = 0; pi < out.points.size(); ++pi) {
      const LinePoint& p = out.points[pi];
      if (mi[i].components[p.line] && mi[i].components[p.line]->contains(p.t)) {
        out.assignment[mi[i].owner] = static_cast<int>(pi);
        break;
      }
    }
  out.nu = d_interval_matching_number(mi, mis_budget);
  out.bound = static_cast<long>(d) * (d - 1) * out.nu;
  out.bound_satisfied = static_cast<long>(out.points.size()) <= out.bound;
  return out;
}

struct PointCheck {
  bool ok = false;
  std::map<std::string, int> assignment;
  std::string violating_id;
};

inline PointCheck verify_point_transversal(const FamilyR& family,
                                           const std::vector<PointR>& points) {
  PointCheck r;
  for (const auto& s : family.sets) {
    int found = -1;
    for (std::size_t i = 0; i < points.size() && found < 0; ++i)
      if (point_in_convex(s, points[i])) found = static_cast<int>(i);
    if (found < 0) {
      r.ok = false;
      r.violating_id = s.id;
      r.assignment.clear();
      return r;
    }
    r.assignment[s.id] = found;
  }
  r.ok = true;
  return r;
}

}  // namespace pierce
