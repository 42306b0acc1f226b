#pragma once

#include <map>
#include <string>
#include <vector>

#include "pierce/interval_piercing.hpp"
#include "pierce/line_solver.hpp"
#include "pierce/matching.hpp"
#include "pierce/set_cover.hpp"

namespace pierce {

inline constexpr int kOracleCap = 16;

struct OracleLines {
  int count = 0;
  std::vector<LineR> lines;
  std::map<std::string, int> assignment;
};

// Ground-truth minimum number of piercing lines, by exhaustive set cover
// over the candidate lines (vertex pairs + axis lines per vertex; see
// candidate_lines for the sufficiency argument).
inline OracleLines exact_min_lines(const FamilyR& family, int cap = kOracleCap,
                                   long budget = kDefaultCoverBudget) {
  if (family.sets.empty()) throw precondition_error("exact_min_lines: empty family");
  if (static_cast<int>(family.sets.size()) > cap)
    throw precondition_error("exact_min_lines: set count exceeds the cap");
  detail::CoverSearch cs = detail::build_cover_search(family);
  const int n = static_cast<int>(family.sets.size());
  auto cover = min_set_cover(n, cs.masks, n, budget);
  if (!cover) throw precondition_error("exact_min_lines: uncoverable (internal)");
  OracleLines r;
  r.count = static_cast<int>(cover->size());
  for (int ci : *cover) r.lines.push_back(cs.lines[ci]);
  r.assignment = verify_line_transversal(family, r.lines).assignment;
  return r;
}

struct OraclePoints {
  int count = 0;
  std::vector<PointR> points;
  std::map<std::string, int> assignment;
};

// Ground-truth piercing number. Candidates: all set vertices plus all
// vertices of pairwise intersections — any piercing point lies in the
// intersection of the sets it covers, and every vertex of such an
// intersection is a vertex of a set or of some pairwise intersection.
inline OraclePoints exact_min_points(const FamilyR& family, int cap = kOracleCap,
                                     long budget = kDefaultCoverBudget) {
  if (family.sets.empty()) throw precondition_error("exact_min_points: empty family");
  if (static_cast<int>(family.sets.size()) > cap)
    throw precondition_error("exact_min_points: set count exceeds the cap");

  std::vector<PointR> cands;
  for (const auto& s : family.sets)
    for (const auto& v : s.vertices) cands.push_back(v);
  FamilyR inter = pairwise_intersections(family);
  for (const auto& s : inter.sets)
    for (const auto& v : s.vertices) cands.push_back(v);
  std::sort(cands.begin(), cands.end(),
            [](const PointR& a, const PointR& b) { return lex_less(a, b); });
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  const int n = static_cast<int>(family.sets.size());
  std::vector<CoverMask> masks;
  masks.reserve(cands.size());
  for (const auto& p : cands) {
    CoverMask m = make_mask(n);
    for (int i = 0; i < n; ++i)
      if (point_in_convex(family.sets[i], p)) mask_set(m, i);
    masks.push_back(std::move(m));
  }
  std::vector<int> keep = maximal_candidates(masks);
  std::vector<PointR> kept_pts;
  std::vector<CoverMask> kept_masks;
  for (int i : keep) {
    kept_pts.push_back(cands[i]);
    kept_masks.push_back(masks[i]);
  }

  auto cover = min_set_cover(n, kept_masks, n, budget);
  if (!cover) throw precondition_error("exact_min_points: uncoverable (internal)");
  OraclePoints r;
  r.count = static_cast<int>(cover->size());
  for (int ci : *cover) r.points.push_back(kept_pts[ci]);
  r.assignment = verify_point_transversal(family, r.points).assignment;
  return r;
}

}  // namespace pierce
