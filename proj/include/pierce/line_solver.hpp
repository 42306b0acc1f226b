#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pierce/config_space.hpp"
#include "pierce/family.hpp"
#include "pierce/matching.hpp"
#include "pierce/set_cover.hpp"

namespace pierce {

inline constexpr int kAutoK = -1;

struct SolveLinesOptions {
  int n_max = 512;                     // finest grid resolution
  long grid_point_budget = 1'500'000;  // cumulative cover_label evaluations
  long cover_budget = kDefaultCoverBudget;
  long mis_budget = kDefaultMisBudget;
  bool use_kkm = true;        // subdivision search phase
  bool use_fallback = true;   // combinatorial set-cover phase
  Rational margin = rat(1, 10);
};

enum class LineSource { kkm_search, combinatorial };

struct LineTransversal {
  std::vector<LineR> lines;  // in the input family's coordinates
  std::map<std::string, int> assignment;
  LineSource source = LineSource::combinatorial;
  std::optional<SimplexPointR> x_star;  // grid point that produced the chords
};

// Returned when the caller forces a k below what the family admits.
struct Infeasibility {
  int k = 0;          // the requested budget (k+1 lines)
  int best_size = 0;  // minimum over the candidate lines
  std::vector<LineR> best_lines;
  std::map<std::string, int> assignment;
};

using SolveLinesResult = std::variant<LineTransversal, Infeasibility>;

struct LineCheck {
  bool ok = false;
  std::map<std::string, int> assignment;
  std::string violating_id;
};

// Exact re-check of a claimed transversal: first meeting line per set, or
// the id of a set no line meets.
inline LineCheck verify_line_transversal(const FamilyR& family,
                                         const std::vector<LineR>& lines) {
  LineCheck r;
  for (const auto& s : family.sets) {
    int found = -1;
    for (std::size_t i = 0; i < lines.size() && found < 0; ++i) {
      const LineR& L = lines[i];
      bool meets = L.degenerate() ? point_in_convex(s, L.a) : line_meets_set(L, s);
      if (meets) found = static_cast<int>(i);
    }
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

namespace detail {

// Visit compositions of N into m parts in lexicographic order. The visitor
// returns false to stop; returns false when the budget ran out mid-stream.
inline bool for_each_composition(int N, int m, long& budget,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> c(m, 0);
  std::function<bool(int, int)> rec = [&](int pos, int left) -> bool {
    if (pos == m - 1) {
      c[pos] = left;
      if (--budget < 0) return false;
      return visit(c);
    }
    for (int v = 0; v <= left; ++v) {
      c[pos] = v;
      if (!rec(pos + 1, left - v)) return false;
    }
    return true;
  };
  return rec(0, N);
}

// Candidate piercing lines for the combinatorial phase: every line through
// two distinct vertices of the union, plus a horizontal and a vertical line
// through each vertex. Sufficiency: translate an optimal line until it
// first touches a vertex v, then rotate about v until a second vertex binds
// — unless every met set contains v itself, in which case any direction
// through v works and the axis lines cover it.
inline std::vector<LineR> candidate_lines(const FamilyR& family) {
  std::vector<PointR> verts;
  for (const auto& s : family.sets)
    for (const auto& p : s.vertices) verts.push_back(p);
  std::sort(verts.begin(), verts.end(),
            [](const PointR& a, const PointR& b) { return lex_less(a, b); });
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  std::vector<LineR> cands;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) cands.push_back({verts[i], verts[j]});
  for (const auto& v : verts) {
    cands.push_back({v, {v.x + 1, v.y}});
    cands.push_back({v, {v.x, v.y + 1}});
  }
  return cands;
}

struct CoverSearch {
  std::vector<LineR> lines;  // deduplicated candidates, original order kept
  std::vector<CoverMask> masks;
};

inline CoverSearch build_cover_search(const FamilyR& family) {
  const int n = static_cast<int>(family.sets.size());
  std::vector<LineR> cands = candidate_lines(family);
  std::vector<CoverMask> masks;
  masks.reserve(cands.size());
  for (const auto& L : cands) {
    CoverMask m = make_mask(n);
    for (int i = 0; i < n; ++i)
      if (line_meets_set(L, family.sets[i])) mask_set(m, i);
    masks.push_back(std::move(m));
  }
  std::vector<int> keep = maximal_candidates(masks);
  CoverSearch cs;
  for (int i : keep) {
    cs.lines.push_back(cands[i]);
    cs.masks.push_back(masks[i]);
  }
  return cs;
}

}  // namespace detail

// Line-transversal solver. AUTO sets k = floor(nu/2); the subdivision search
// walks dyadic grids over the simplex evaluating the KKM cover label, and
// every NONE hit is re-verified with exact arithmetic before being returned
// (the float chords convert losslessly to rational lines). The good x set
// can have empty interior, so grid exhaustion falls back to exact set cover
// over vertex-pair candidate lines, which always admit a k-line cover when
// the KKM bound holds.
inline SolveLinesResult solve_lines(const FamilyR& family, int k = kAutoK,
                                    const SolveLinesOptions& opt = {}) {
  if (family.sets.empty()) throw precondition_error("solve_lines: empty family");
  if (k == kAutoK) {
    k = matching_number(family, opt.mis_budget).nu / 2;
  } else if (k < 0) {
    throw precondition_error("solve_lines: k must be >= 0");
  }

  if (opt.use_kkm) {
    FamilyR base = family;
    base.transform = Similarity<Rational>{};
    FamilyR norm = normalize_to_disk(base, opt.margin);
    const Similarity<Rational>& map = norm.transform;
    FamilyD normd = to_double(norm);

    const int m = 2 * k + 2;
    long budget = opt.grid_point_budget;
    std::optional<LineTransversal> hit;

    for (int N = 8; N <= opt.n_max && budget > 0 && !hit; N *= 2) {
      detail::for_each_composition(N, m, budget, [&](const std::vector<int>& comp) {
        SimplexPointD xd;
        xd.coords.reserve(m);
        for (int c : comp) xd.coords.push_back(double(c) / N);  // dyadic: exact
        if (cover_label(xd, normd).has_value()) return true;
        // float NONE: exact acceptance or keep searching
        ChordSystem<double> cs = chord_system(xd);
        std::vector<LineR> chords;
        for (const auto& ch : cs.chords)
          if (!ch.degenerate()) chords.push_back(to_rational(ch));
        LineCheck chk = verify_line_transversal(norm, chords);
        if (!chk.ok) return true;
        LineTransversal t;
        for (const auto& ch : chords) t.lines.push_back(map.invert(ch));
        t.assignment = chk.assignment;
        t.source = LineSource::kkm_search;
        SimplexPointR xr;
        for (int c : comp) xr.coords.push_back(rat(c, N));
        t.x_star = std::move(xr);
        hit = std::move(t);
        return false;
      });
    }
    if (hit) {
      // the lines live in input coordinates now; re-verify there
      LineCheck chk = verify_line_transversal(family, hit->lines);
      if (chk.ok) {
        hit->assignment = chk.assignment;
        return *hit;
      }
    }
    if (!opt.use_fallback)
      throw budget_error("solve_lines: grid exhausted and fallback disabled");
  }

  if (!opt.use_fallback)
    throw precondition_error("solve_lines: all methods disabled");

  detail::CoverSearch cs = detail::build_cover_search(family);
  const int n = static_cast<int>(family.sets.size());
  auto cover = min_set_cover(n, cs.masks, k + 1, opt.cover_budget);
  if (cover) {
    LineTransversal t;
    for (int ci : *cover) t.lines.push_back(cs.lines[ci]);
    LineCheck chk = verify_line_transversal(family, t.lines);
    if (!chk.ok) throw budget_error("solve_lines: internal cover verification failed");
    t.assignment = chk.assignment;
    t.source = LineSource::combinatorial;
    return t;
  }

  // k was forced too small: report the true minimum over the candidates
  auto best = min_set_cover(n, cs.masks, n, opt.cover_budget);
  Infeasibility inf;
  inf.k = k;
  if (best) {
    inf.best_size = static_cast<int>(best->size());
    for (int ci : *best) inf.best_lines.push_back(cs.lines[ci]);
    inf.assignment = verify_line_transversal(family, inf.best_lines).assignment;
  }
  return inf;
}

struct ColorfulResult {
  int j = 0;  // 1-based index of the pierced family
  LineTransversal transversal;
  bool rainbow_checked = false;  // exhaustive check ran (vs assumed)
};

// A selection of one set per family that is pairwise disjoint: disproves
// the rainbow condition.
struct RainbowViolation {
  std::vector<std::string> selection;
};

using SolveColorfulResult = std::variant<ColorfulResult, RainbowViolation>;

namespace detail {

// Search for a pairwise-disjoint selection, one set per family. Returns
// nullopt if none exists (= rainbow condition holds). Node budget bounds
// desk-scale exhaustiveness; nullopt + checked=false when it runs out.
inline std::optional<std::vector<int>> disjoint_selection(
    const std::vector<FamilyR>& families, long budget, bool& exhausted) {
  const int f = static_cast<int>(families.size());
  std::vector<int> pick(f, -1);
  std::function<std::optional<std::vector<int>>(int)> rec =
      [&](int j) -> std::optional<std::vector<int>> {
    if (j == f) return pick;
    for (int i = 0; i < static_cast<int>(families[j].sets.size()); ++i) {
      if (--budget < 0) {
        exhausted = true;
        return std::nullopt;
      }
      bool disjoint = true;
      for (int jj = 0; jj < j && disjoint; ++jj)
        if (intersect_convex(families[jj].sets[pick[jj]], families[j].sets[i]).has_value())
          disjoint = false;
      if (!disjoint) continue;
      pick[j] = i;
      if (auto r = rec(j + 1)) return r;
      if (exhausted) return std::nullopt;
      pick[j] = -1;
    }
    return std::nullopt;
  };
  return rec(0);
}

}  // namespace detail

// Colorful solver: 2k color classes, m = 2k boundary points, k chords. A
// grid point whose chords pierce any single family F_j (its cover label is
// NONE) settles that j; the fallback asks, family by family, for an exact
// <= k line cover, which the colorful KKM argument guarantees for some j.
inline SolveColorfulResult solve_colorful(const std::vector<FamilyR>& families,
                                          const SolveLinesOptions& opt = {},
                                          long rainbow_budget = 2'000'000) {
  const int f = static_cast<int>(families.size());
  if (f < 2 || f % 2 != 0)
    throw precondition_error("solve_colorful: need an even number (2k) of families");
  for (const auto& fam : families)
    if (fam.sets.empty()) throw precondition_error("solve_colorful: empty family");
  const int k = f / 2;

  bool exhausted = false;
  auto bad = detail::disjoint_selection(families, rainbow_budget, exhausted);
  if (bad) {
    RainbowViolation v;
    for (int j = 0; j < f; ++j) v.selection.push_back(families[j].sets[(*bad)[j]].id);
    return v;
  }
  const bool rainbow_checked = !exhausted;

  // one similarity for all families together
  FamilyR pooled;
  pooled.sets.reserve(64);
  for (const auto& fam : families)
    for (const auto& s : fam.sets) {
      ConvexSetR c = s;
      c.id = "#" + std::to_string(pooled.sets.size());  // ids may repeat across families
      pooled.sets.push_back(std::move(c));
    }
  FamilyR pooled_norm = normalize_to_disk(pooled, opt.margin);
  const Similarity<Rational>& map = pooled_norm.transform;

  std::vector<FamilyR> norm(f);
  std::vector<FamilyD> normd(f);
  for (int j = 0; j < f; ++j) {
    norm[j].transform = map;
    for (const auto& s : families[j].sets) {
      ConvexSetR c;
      c.id = s.id;
      for (const auto& p : s.vertices) c.vertices.push_back(map.apply(p));
      norm[j].sets.push_back(std::move(c));
    }
    normd[j] = to_double(norm[j]);
  }

  if (opt.use_kkm) {
    const int m = 2 * k;
    long budget = opt.grid_point_budget;
    std::optional<ColorfulResult> hit;
    for (int N = 8; N <= opt.n_max && budget > 0 && !hit; N *= 2) {
      detail::for_each_composition(N, m, budget, [&](const std::vector<int>& comp) {
        SimplexPointD xd;
        xd.coords.reserve(m);
        for (int c : comp) xd.coords.push_back(double(c) / N);
        ChordSystem<double> cs;
        bool have_cs = false;
        for (int j = 0; j < f; ++j) {
          if (cover_label(xd, normd[j]).has_value()) continue;
          if (!have_cs) {
            cs = chord_system(xd);
            have_cs = true;
          }
          std::vector<LineR> chords;
          for (const auto& ch : cs.chords)
            if (!ch.degenerate()) chords.push_back(to_rational(ch));
          LineCheck chk = verify_line_transversal(norm[j], chords);
          if (!chk.ok) continue;
          ColorfulResult r;
          r.j = j + 1;
          for (const auto& ch : chords) r.transversal.lines.push_back(map.invert(ch));
          r.transversal.source = LineSource::kkm_search;
          SimplexPointR xr;
          for (int c : comp) xr.coords.push_back(rat(c, N));
          r.transversal.x_star = std::move(xr);
          r.rainbow_checked = rainbow_checked;
          hit = std::move(r);
          return false;
        }
        return true;
      });
    }
    if (hit) {
      LineCheck chk = verify_line_transversal(families[hit->j - 1], hit->transversal.lines);
      if (chk.ok) {
        hit->transversal.assignment = chk.assignment;
        return *hit;
      }
    }
    if (!opt.use_fallback)
      throw budget_error("solve_colorful: grid exhausted and fallback disabled");
  }

  for (int j = 0; j < f; ++j) {
    detail::CoverSearch cs = detail::build_cover_search(families[j]);
    const int n = static_cast<int>(families[j].sets.size());
    auto cover = min_set_cover(n, cs.masks, k, opt.cover_budget);
    if (!cover) continue;
    ColorfulResult r;
    r.j = j + 1;
    for (int ci : *cover) r.transversal.lines.push_back(cs.lines[ci]);
    LineCheck chk = verify_line_transversal(families[j], r.transversal.lines);
    if (!chk.ok) continue;
    r.transversal.assignment = chk.assignment;
    r.transversal.source = LineSource::combinatorial;
    r.rainbow_checked = rainbow_checked;
    return r;
  }
  throw budget_error(
      "solve_colorful: no family admits a k-line cover; rainbow hypothesis likely violated");
}

}  // namespace pierce
