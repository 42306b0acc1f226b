#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "pierce/errors.hpp"

namespace pierce {

inline constexpr long kDefaultCoverBudget = 20'000'000;

// Coverage sets over n_elements ground elements, as multi-word bitmasks.
using CoverMask = std::vector<std::uint64_t>;

inline CoverMask make_mask(int n_elements) {
  return CoverMask((n_elements + 63) / 64, 0);
}
inline void mask_set(CoverMask& m, int i) { m[i / 64] |= std::uint64_t(1) << (i % 64); }
inline bool mask_test(const CoverMask& m, int i) {
  return (m[i / 64] >> (i % 64)) & 1;
}
inline int mask_count(const CoverMask& m) {
  int c = 0;
  for (auto w : m) c += std::popcount(w);
  return c;
}
inline bool mask_subset(const CoverMask& a, const CoverMask& b) {  // a ⊆ b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

namespace detail {

inline int covered_count(const CoverMask& cand, const CoverMask& uncovered) {
  int c = 0;
  for (std::size_t i = 0; i < cand.size(); ++i) c += std::popcount(cand[i] & uncovered[i]);
  return c;
}

inline bool cover_dfs(const std::vector<CoverMask>& cands,
                      const std::vector<std::vector<int>>& elem_cands, CoverMask& uncovered,
                      int remaining_depth, std::vector<int>& chosen, long& budget) {
  if (--budget < 0) throw budget_error("set-cover search budget exhausted");
  const int left = mask_count(uncovered);
  if (left == 0) return true;
  if (remaining_depth == 0) return false;

  int best_gain = 0;
  for (const auto& c : cands) best_gain = std::max(best_gain, covered_count(c, uncovered));
  if (static_cast<long>(best_gain) * remaining_depth < left) return false;

  // branch on the uncovered element with the fewest live candidates
  int pick = -1, pick_opts = -1;
  const int n = static_cast<int>(elem_cands.size());
  for (int e = 0; e < n; ++e) {
    if (!mask_test(uncovered, e)) continue;
    int opts = static_cast<int>(elem_cands[e].size());
    if (pick < 0 || opts < pick_opts) {
      pick = e;
      pick_opts = opts;
    }
  }
  if (pick_opts == 0) return false;

  for (int ci : elem_cands[pick]) {
    CoverMask saved = uncovered;
    for (std::size_t w = 0; w < uncovered.size(); ++w) uncovered[w] &= ~cands[ci][w];
    chosen.push_back(ci);
    if (cover_dfs(cands, elem_cands, uncovered, remaining_depth - 1, chosen, budget)) return true;
    chosen.pop_back();
    uncovered = std::move(saved);
  }
  return false;
}

}  // namespace detail

// Exact minimum set cover by iterative-deepening DFS, branching on the
// hardest element. Returns candidate indices of a smallest cover of size
// <= max_size, nullopt when none exists. Deterministic: candidates are
// tried in index order, so the first cover found at the optimal size is the
// lexicographically smallest one. Throws budget_error on budget exhaustion.
inline std::optional<std::vector<int>> min_set_cover(int n_elements,
                                                     const std::vector<CoverMask>& cands,
                                                     int max_size,
                                                     long budget = kDefaultCoverBudget) {
  if (n_elements == 0) return std::vector<int>{};
  std::vector<std::vector<int>> elem_cands(n_elements);
  for (int e = 0; e < n_elements; ++e)
    for (int ci = 0; ci < static_cast<int>(cands.size()); ++ci)
      if (mask_test(cands[ci], e)) elem_cands[e].push_back(ci);
  for (int e = 0; e < n_elements; ++e)
    if (elem_cands[e].empty()) return std::nullopt;

  for (int size = 1; size <= max_size; ++size) {
    CoverMask uncovered = make_mask(n_elements);
    for (int e = 0; e < n_elements; ++e) mask_set(uncovered, e);
    std::vector<int> chosen;
    if (detail::cover_dfs(cands, elem_cands, uncovered, size, chosen, budget)) return chosen;
  }
  return std::nullopt;
}

// Drop candidates whose coverage is contained in an earlier or equal one.
// Keeps the first of equal masks; returns surviving original indices.
inline std::vector<int> maximal_candidates(const std::vector<CoverMask>& cands) {
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    bool dominated = false;
    for (int j = 0; j < static_cast<int>(cands.size()) && !dominated; ++j) {
      if (j == i) continue;
      if (mask_subset(cands[i], cands[j])) {
        // ties: the smaller index survives
        if (!mask_subset(cands[j], cands[i]) || j < i) dominated = true;
      }
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

}  // namespace pierce
