#pragma once

// Independent oracles the tests check the engines against. Everything here
// is deliberately naive: full enumeration, all-pairs checks, permutation
// scans. None of it shares code with the pruned engines.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "radio/distance.hpp"
#include "radio/family.hpp"
#include "radio/pattern.hpp"

namespace oracles {

// All-pairs radio condition over a complete assignment of vertices 0..n-1.
inline bool valid_labeling(const radio::DistanceFamily& family, int k,
                           const std::vector<long>& labels) {
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long gap = std::labs(labels[i] - labels[j]);
      if (gap + radio::distance(family, i, j) <= k) return false;
    }
  return true;
}

// Unpruned odometer over every labeling of n vertices with labels in [0,l]
// and the first vertex pinned to 0; returns the first valid one in
// lexicographic order, if any.
inline std::optional<std::vector<long>> naive_first_labeling(
    const radio::DistanceFamily& family, int k, long l, int n) {
  std::vector<long> labels(n, 0);
  for (;;) {
    if (valid_labeling(family, k, labels)) return labels;
    int pos = n - 1;
    while (pos >= 1 && labels[pos] == l) labels[pos--] = 0;
    if (pos < 1) return std::nullopt;
    ++labels[pos];
  }
}

// Exhaustive pairwise check of the radio condition over the vertex window
// [1, 3*period]; the lexicographically first violating pair, if any.
inline std::optional<std::pair<long, long>> window_violation(
    const radio::PeriodicPattern& pattern, int k) {
  const long window = 3 * pattern.period;
  for (long i = 1; i <= window; ++i)
    for (long j = i + 1; j <= window; ++j) {
      long gap = std::labs(pattern.label_of(i) - pattern.label_of(j));
      if (gap + radio::distance(pattern.family, i, j) <= k) return std::pair{i, j};
    }
  return std::nullopt;
}

// Maximum ordering score by scanning all permutations; n <= 8.
inline long t_plus_permutations(const std::vector<std::vector<long>>& dist) {
  const int n = static_cast<int>(dist.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  long best = 0;
  do {
    long score = 0;
    for (int i = 0; i + 1 < n; ++i) score += dist[order[i]][order[i + 1]];
    best = std::max(best, score);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace oracles
