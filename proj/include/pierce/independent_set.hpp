#pragma once

#include <algorithm>
#include <vector>

#include "pierce/errors.hpp"

namespace pierce {

inline constexpr long kDefaultMisBudget = 5'000'000;

namespace detail {

// Greedy clique cover of the candidate vertices: the number of cliques is an
// upper bound on the independent set size within them.
inline int clique_cover_bound(const std::vector<std::vector<char>>& adj,
                              const std::vector<int>& cand) {
  std::vector<std::vector<int>> cliques;
  for (int v : cand) {
    bool placed = false;
    for (auto& q : cliques) {
      bool fits = true;
      for (int u : q)
        if (!adj[u][v]) {
          fits = false;
          break;
        }
      if (fits) {
        q.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) cliques.push_back({v});
  }
  return static_cast<int>(cliques.size());
}

inline int mis_dfs(const std::vector<std::vector<char>>& adj, std::vector<int>& cand,
                   int chosen, int& best, long& budget) {
  if (--budget < 0) throw budget_error("independent-set search budget exhausted");
  if (cand.empty()) {
    best = std::max(best, chosen);
    return chosen;
  }
  if (chosen + clique_cover_bound(adj, cand) <= best) return best;

  // branch on the highest-degree candidate (degree within cand)
  int pick = cand[0], pick_deg = -1;
  for (int v : cand) {
    int d = 0;
    for (int u : cand) d += adj[v][u];
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }

  // include pick
  std::vector<int> sub;
  sub.reserve(cand.size());
  for (int u : cand)
    if (u != pick && !adj[pick][u]) sub.push_back(u);
  int with = mis_dfs(adj, sub, chosen + 1, best, budget);

  // exclude pick
  std::vector<int> rest;
  rest.reserve(cand.size());
  for (int u : cand)
    if (u != pick) rest.push_back(u);
  int without = mis_dfs(adj, rest, chosen, best, budget);
  return std::max(with, without);
}

}  // namespace detail

// Exact maximum independent set size of the graph given by a symmetric
// adjacency matrix. Throws budget_error when the node budget runs out:
// bounds are contracts, never heuristic answers.
inline int independent_set_size(const std::vector<std::vector<char>>& adj,
                                std::vector<int> candidates, long& budget) {
  int best = 0;
  detail::mis_dfs(adj, candidates, 0, best, budget);
  return best;
}

struct MisResult {
  int size = 0;
  std::vector<int> witness;  // vertex indices, increasing; lexicographically
                             // smallest among maximum independent sets
};

inline MisResult max_independent_set(const std::vector<std::vector<char>>& adj,
                                     long budget = kDefaultMisBudget) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  MisResult r;
  r.size = independent_set_size(adj, all, budget);

  // lexicographically smallest witness: greedily keep each vertex whose
  // inclusion still allows a maximum set among the later, non-adjacent ones
  std::vector<int> cand = all;
  int need = r.size;
  for (int v = 0; v < n && need > 0; ++v) {
    if (std::find(cand.begin(), cand.end(), v) == cand.end()) continue;
    std::vector<int> sub;
    for (int u : cand)
      if (u > v && !adj[v][u]) sub.push_back(u);
    if (independent_set_size(adj, sub, budget) == need - 1) {
      r.witness.push_back(v);
      --need;
      cand = std::move(sub);
    }
  }
  return r;
}

}  // namespace pierce
