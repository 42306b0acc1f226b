#pragma once

#include <string>
#include <vector>

#include "pierce/family.hpp"
#include "pierce/geometry.hpp"
#include "pierce/independent_set.hpp"

namespace pierce {

// Vertices are family positions; edge (i,j) iff the sets intersect.
struct IntersectionGraph {
  int n = 0;
  std::vector<std::string> ids;
  std::vector<std::vector<char>> adj;
};

inline IntersectionGraph intersection_graph(const FamilyR& family) {
  IntersectionGraph g;
  g.n = static_cast<int>(family.sets.size());
  g.adj.assign(g.n, std::vector<char>(g.n, 0));
  for (const auto& s : family.sets) g.ids.push_back(s.id);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (intersect_convex(family.sets[i], family.sets[j]).has_value())
        g.adj[i][j] = g.adj[j][i] = 1;
  return g;
}

struct MatchingResult {
  int nu = 0;                        // matching number = max pairwise-disjoint subfamily
  std::vector<std::string> witness;  // ids of one such subfamily, lexicographically
                                     // smallest in family position order
};

// The matching number is the independence number of the intersection graph.
inline MatchingResult matching_number(const FamilyR& family,
                                      long budget = kDefaultMisBudget) {
  if (family.sets.empty()) throw precondition_error("matching_number: empty family");
  IntersectionGraph g = intersection_graph(family);
  MisResult mis = max_independent_set(g.adj, budget);
  MatchingResult r;
  r.nu = mis.size;
  for (int v : mis.witness) r.witness.push_back(g.ids[v]);
  return r;
}

// (p,q) property with q=2: among any p members, some two intersect.
// Equivalent to matching_number < p.
inline bool has_pq_property(const FamilyR& family, int p, int q,
                            long budget = kDefaultMisBudget) {
  if (q != 2) throw precondition_error("has_pq_property: only q=2 is supported");
  if (p < 2) throw precondition_error("has_pq_property: p must be >= 2");
  return matching_number(family, budget).nu < p;
}

// F' of the paper: every nonempty pairwise intersection, over unordered
// pairs in family order, with ids recording the parents. Coordinates (and
// the recorded transform) are unchanged.
inline FamilyR pairwise_intersections(const FamilyR& family) {
  FamilyR out;
  out.transform = family.transform;
  const auto& s = family.sets;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (auto r = intersect_convex(s[i], s[j], s[i].id + "&" + s[j].id))
        out.sets.push_back(std::move(*r));
  return out;
}

inline std::vector<std::string> isolated_sets(const FamilyR& family) {
  IntersectionGraph g = intersection_graph(family);
  std::vector<std::string> out;
  for (int i = 0; i < g.n; ++i) {
    bool alone = true;
    for (int j = 0; j < g.n && alone; ++j)
      if (g.adj[i][j]) alone = false;
    if (alone) out.push_back(g.ids[i]);
  }
  return out;
}

}  // namespace pierce
