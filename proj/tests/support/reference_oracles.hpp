#pragma once

// Independent reference implementations used only to derive and check
// expected values. Deliberately different algorithms from the library:
// correctness here comes from brute force, not speed.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pierce/family.hpp"
#include "pierce/geometry.hpp"
#include "pierce/interval_piercing.hpp"

namespace pierce::oracle {

// Every extreme point of A ∩ B is a vertex of A inside B, a vertex of B
// inside A, or a proper edge-edge crossing; collect them all.
inline std::vector<PointR> intersection_point_pool(const ConvexSetR& A, const ConvexSetR& B) {
  std::vector<PointR> pool;
  for (const auto& v : A.vertices)
    if (point_in_convex(B, v)) pool.push_back(v);
  for (const auto& v : B.vertices)
    if (point_in_convex(A, v)) pool.push_back(v);

  auto edges = [](const ConvexSetR& s) {
    std::vector<std::pair<PointR, PointR>> e;
    const auto& v = s.vertices;
    if (v.size() == 2) e.emplace_back(v[0], v[1]);
    if (v.size() >= 3)
      for (std::size_t i = 0; i < v.size(); ++i) e.emplace_back(v[i], v[(i + 1) % v.size()]);
    return e;
  };
  for (const auto& [p, q] : edges(A))
    for (const auto& [r, s] : edges(B)) {
      PointR d1 = q - p, d2 = s - r;
      Rational den = cross(d1, d2);
      if (sgn(den) == 0) continue;  // collinear overlaps are covered by vertex membership
      Rational t = cross(r - p, d2) / den;
      Rational u = cross(r - p, d1) / den;
      if (t < 0 || t > 1 || u < 0 || u > 1) continue;
      pool.push_back(p + t * d1);
    }
  return pool;
}

// Exhaustive matching number over all subsets; n <= 20.
inline int ref_matching_number(const FamilyR& fam) {
  const int n = static_cast<int>(fam.sets.size());
  std::vector<std::vector<bool>> meet(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      meet[i][j] = meet[j][i] = intersect_convex(fam.sets[i], fam.sets[j]).has_value();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ++size;
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> j & 1) && meet[i][j]) ok = false;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// Plain iterative-deepening cover search: branch on the first uncovered
// element, try every candidate containing it. No dominance reduction, no
// gain bounds — structurally different from the library's solver.
inline bool ref_cover_dfs(const std::vector<std::vector<int>>& cand_of_elem,
                          const std::vector<std::vector<std::uint64_t>>& covers, int n_elems,
                          std::vector<std::uint64_t>& done, int left) {
  int first = -1;
  for (int e = 0; e < n_elems; ++e)
    if (!(done[e >> 6] >> (e & 63) & 1)) { first = e; break; }
  if (first < 0) return true;
  if (left == 0) return false;
  for (int c : cand_of_elem[first]) {
    std::vector<std::uint64_t> saved = done;
    for (std::size_t w = 0; w < done.size(); ++w) done[w] |= covers[c][w];
    if (ref_cover_dfs(cand_of_elem, covers, n_elems, done, left - 1)) return true;
    done = saved;
  }
  return false;
}

// covers[c] = bitmask of elements candidate c covers. Returns the minimum
// cover size, or -1 if some element is uncoverable.
inline int ref_min_cover(const std::vector<std::vector<std::uint64_t>>& covers, int n_elems) {
  if (n_elems == 0) return 0;
  std::vector<std::vector<int>> cand_of_elem(n_elems);
  for (std::size_t c = 0; c < covers.size(); ++c)
    for (int e = 0; e < n_elems; ++e)
      if (covers[c][e >> 6] >> (e & 63) & 1) cand_of_elem[e].push_back(static_cast<int>(c));
  for (int e = 0; e < n_elems; ++e)
    if (cand_of_elem[e].empty()) return -1;
  const std::size_t words = (n_elems + 63) / 64;
  for (int k = 1; k <= n_elems; ++k) {
    std::vector<std::uint64_t> done(words, 0);
    if (ref_cover_dfs(cand_of_elem, covers, n_elems, done, k)) return k;
  }
  return n_elems;
}

// Exact interval matching number by the classical scheduling DP (sort by
// right endpoint; f(i) = best among intervals i.. choosing or skipping i).
inline int ref_interval_nu(std::vector<Interval> iv) {
  std::sort(iv.begin(), iv.end(),
            [](const auto& a, const auto& b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); });
  const int n = static_cast<int>(iv.size());
  std::vector<int> f(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    int next = i + 1;
    while (next < n && iv[next].lo <= iv[i].hi) ++next;  // overlapping, skip
    f[i] = std::max(f[i + 1], 1 + f[next]);
  }
  return f[0];
}

// Exact minimum interval piercing via cover search over right endpoints.
inline int ref_interval_tau(const std::vector<Interval>& iv) {
  const int n = static_cast<int>(iv.size());
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> covers;
  for (const auto& c : iv) {
    std::vector<std::uint64_t> m(words, 0);
    for (int e = 0; e < n; ++e)
      if (iv[e].contains(c.hi)) m[e >> 6] |= 1ull << (e & 63);
    covers.push_back(std::move(m));
  }
  return ref_min_cover(covers, n);
}

// Exhaustive d-interval matching number; n <= 20.
inline int ref_dinterval_nu(const std::vector<MultiInterval>& mis) {
  const int n = static_cast<int>(mis.size());
  auto overlap = [&](int a, int b) {
    for (std::size_t l = 0; l < mis[a].components.size(); ++l)
      if (mis[a].components[l] && mis[b].components[l] &&
          mis[a].components[l]->overlaps(*mis[b].components[l]))
        return true;
    return false;
  };
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ++size;
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> j & 1) && overlap(i, j)) ok = false;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// Minimum d-interval piercing over an arbitrary candidate point list.
inline int ref_dinterval_tau(const std::vector<MultiInterval>& mis,
                             const std::vector<LinePoint>& candidates) {
  const int n = static_cast<int>(mis.size());
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> covers;
  for (const auto& c : candidates) {
    std::vector<std::uint64_t> m(words, 0);
    for (int e = 0; e < n; ++e) {
      const auto& comp = mis[e].components[c.line];
      if (comp && comp->contains(c.t)) m[e >> 6] |= 1ull << (e & 63);
    }
    covers.push_back(std::move(m));
  }
  return ref_min_cover(covers, n);
}

// Dense-grid minimum point piercing: every grid point (i*pitch, j*pitch)
// inside the family's bounding box is a candidate. Exact containment tests;
// distinct coverage masks are deduplicated before the cover search.
inline int grid_min_points(const FamilyR& fam, const Rational& pitch) {
  Rational xlo = fam.sets[0].vertices[0].x, xhi = xlo;
  Rational ylo = fam.sets[0].vertices[0].y, yhi = ylo;
  for (const auto& s : fam.sets)
    for (const auto& v : s.vertices) {
      xlo = std::min(xlo, v.x), xhi = std::max(xhi, v.x);
      ylo = std::min(ylo, v.y), yhi = std::max(yhi, v.y);
    }
  const int n = static_cast<int>(fam.sets.size());
  const std::size_t words = (n + 63) / 64;

  std::vector<std::pair<double, double>> boxes;  // double prefilter per set
  for (const auto& s : fam.sets) {
    double bx0 = 1e300, bx1 = -1e300;
    for (const auto& v : s.vertices) {
      bx0 = std::min(bx0, to_double(v.x));
      bx1 = std::max(bx1, to_double(v.x));
    }
    boxes.emplace_back(bx0, bx1);
  }

  std::vector<std::vector<std::uint64_t>> covers;
  long ilo = static_cast<long>(std::floor(to_double(xlo / pitch)));
  long ihi = static_cast<long>(std::ceil(to_double(xhi / pitch)));
  long jlo = static_cast<long>(std::floor(to_double(ylo / pitch)));
  long jhi = static_cast<long>(std::ceil(to_double(yhi / pitch)));
  for (long i = ilo; i <= ihi; ++i) {
    const Rational px = rat(i) * pitch;
    const double pxd = to_double(px);
    for (long j = jlo; j <= jhi; ++j) {
      const PointR p{px, rat(j) * pitch};
      std::vector<std::uint64_t> m(words, 0);
      bool any = false;
      for (int e = 0; e < n; ++e) {
        if (pxd < boxes[e].first - 1e-9 || pxd > boxes[e].second + 1e-9) continue;
        if (point_in_convex(fam.sets[e], p)) {
          m[e >> 6] |= 1ull << (e & 63);
          any = true;
        }
      }
      if (any && std::find(covers.begin(), covers.end(), m) == covers.end())
        covers.push_back(std::move(m));
    }
  }
  return ref_min_cover(covers, n);
}

// Continuous random-restart line-cover search. For w = 1, 2, ... sample w
// lines through random points of random sets (vertices or interior mixes)
// and accept the first exactly-verified full cover; the smallest feasible w
// found within the restart budget is returned. Upper-bound search only — it
// can exceed the true minimum, never undercut a correct one.
inline int restart_min_lines(const FamilyR& fam, std::uint64_t seed, int max_w,
                             int restarts_per_w = 30000) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int n = static_cast<int>(fam.sets.size());

  FamilyD famd = to_double(fam);
  auto sample_point = [&](int si) -> PointD {
    const auto& vs = famd.sets[si].vertices;
    if (uni(rng) < 0.4) return vs[static_cast<std::size_t>(uni(rng) * vs.size()) % vs.size()];
    double wsum = 0;  // random convex combination
    PointD acc{0, 0};
    for (const auto& v : vs) {
      double w = uni(rng) + 1e-3;
      acc = acc + w * v;
      wsum += w;
    }
    return {acc.x / wsum, acc.y / wsum};
  };

  for (int w = 1; w <= max_w; ++w) {
    for (int trial = 0; trial < restarts_per_w; ++trial) {
      std::vector<LineD> lines;
      for (int li = 0; li < w; ++li) {
        int sa = static_cast<int>(uni(rng) * n) % n;
        int sb = static_cast<int>(uni(rng) * n) % n;
        PointD a = sample_point(sa), b = sample_point(sb);
        if (a == b) { --li; continue; }
        lines.push_back({a, b});
      }
      bool all = true;
      for (int e = 0; e < n && all; ++e) {
        bool hit = false;
        for (const auto& l : lines)
          if (line_meets_set(l, famd.sets[e])) { hit = true; break; }
        all = hit;
      }
      if (!all) continue;
      // float said covered; confirm exactly before accepting
      bool exact_ok = true;
      std::vector<LineR> rl;
      for (const auto& l : lines)
        rl.push_back({{rat_from_double(l.a.x), rat_from_double(l.a.y)},
                      {rat_from_double(l.b.x), rat_from_double(l.b.y)}});
      for (int e = 0; e < n && exact_ok; ++e) {
        bool hit = false;
        for (const auto& l : rl)
          if (!l.degenerate() && line_meets_set(l, fam.sets[e])) { hit = true; break; }
        exact_ok = hit;
      }
      if (exact_ok) return w;
    }
  }
  return max_w + 1;
}

}  // namespace pierce::oracle
