#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pierce/interval_piercing.hpp"
#include "pierce/line_solver.hpp"
#include "pierce/matching.hpp"

namespace pierce {

struct PipelineOptions {
  // optional caller-supplied upper bounds for nu(F) and nu(F'); when given,
  // k and the bound use them instead of the computed values
  std::optional<int> p_bound;
  std::optional<int> r_bound;
  SolveLinesOptions lines;
  long mis_budget = kDefaultMisBudget;
  long cover_budget = kDefaultCoverBudget;
};

struct PipelineReport {
  int p = 0;  // nu(F)
  int r = 0;  // nu(F')
  int k = 0;  // floor(r/2)
  LineTransversal lines;        // pierces F'
  PointTransversal points;      // pierces F
  std::map<std::string, int> line_assignment_fprime;
  long bound = 0;               // (k^2+k)p for r >= 2, p otherwise
  bool bound_satisfied = false;
};

// The end-to-end point-piercing procedure, each proof step re-checked:
// (1) F' = pairwise intersections, r = nu(F');
// (2) <= k+1 lines piercing F' (k = floor(r/2));
// (3) traces F-bar on those lines: all nonempty, and nu(F-bar) <= p;
// (4) exact minimum piercing of the trace family, lifted back to the plane;
// (5) exact point-in-set verification;
// (6) bound check |points| <= (k^2+k)p (r >= 2) or <= p (r <= 1).
inline PipelineReport theorem1_pierce(const FamilyR& family, const PipelineOptions& opt = {}) {
  if (family.sets.empty()) throw precondition_error("theorem1_pierce: empty family");
  std::vector<std::string> iso = isolated_sets(family);
  if (!iso.empty()) {
    std::string msg = "theorem1_pierce: isolated sets present:";
    for (const auto& id : iso) msg += " " + id;
    throw precondition_error(msg);
  }

  PipelineReport rep;

  // (1)
  FamilyR fprime = pairwise_intersections(family);
  rep.r = opt.r_bound ? *opt.r_bound : matching_number(fprime, opt.mis_budget).nu;
  rep.p = opt.p_bound ? *opt.p_bound : matching_number(family, opt.mis_budget).nu;
  rep.k = rep.r / 2;

  // (2)
  SolveLinesResult lr = solve_lines(fprime, rep.k, opt.lines);
  if (std::holds_alternative<Infeasibility>(lr))
    throw precondition_error(
        "theorem1_pierce: supplied r bound admits no k+1 line transversal of the "
        "pairwise intersections");
  rep.lines = std::get<LineTransversal>(lr);
  rep.line_assignment_fprime = rep.lines.assignment;

  // (3)
  std::vector<MultiInterval> traces = trace_on_lines(family, rep.lines.lines);
  for (const auto& mi : traces)
    if (mi.all_empty())
      throw precondition_error("theorem1_pierce: set '" + mi.owner +
                               "' misses every line (internal invariant violated)");
  int nu_traces = d_interval_matching_number(traces, opt.mis_budget);
  if (nu_traces > rep.p)
    throw precondition_error(
        "theorem1_pierce: trace family matching number exceeds p (invalid supplied bound?)");

  // (4)
  DIntervalPiercing piercing = pierce_d_intervals(traces, opt.cover_budget, opt.mis_budget);
  std::vector<PointR> pts;
  for (const auto& lp : piercing.points) {
    const LineR& L = rep.lines.lines[lp.line];
    PointR p = L.a + lp.t * (L.b - L.a);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }

  // (5)
  rep.points.points = std::move(pts);
  PointCheck chk = verify_point_transversal(family, rep.points.points);
  if (!chk.ok)
    throw precondition_error("theorem1_pierce: point verification failed for '" +
                             chk.violating_id + "' (internal invariant violated)");
  rep.points.assignment = chk.assignment;

  // (6)
  rep.bound = rep.r >= 2 ? static_cast<long>(rep.k) * (rep.k + 1) * rep.p : rep.p;
  rep.bound_satisfied = static_cast<long>(rep.points.points.size()) <= rep.bound;
  return rep;
}

}  // namespace pierce
