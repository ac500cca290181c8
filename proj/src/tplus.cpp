#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "radio/distance.hpp"
#include "radio/search.hpp"

namespace radio {

OrderingScore t_plus_ordering_matrix(const std::vector<std::vector<long>>& dist) {
  const int n = static_cast<int>(dist.size());
  if (n < 2) throw std::invalid_argument("t_plus needs at least two vertices");
  if (n > 20) throw std::invalid_argument("t_plus matrix is capped at 20 vertices");
  for (const auto& row : dist)
    if (row.size() != dist.size())
      throw std::invalid_argument("t_plus distance matrix must be square");

  // dp[mask][last]: best ordering score over the vertex set `mask` ending at
  // `last`. 2^n * n states, n transitions each.
  const std::size_t full = std::size_t{1} << n;
  std::vector<long> dp(full * n, -1);
  std::vector<signed char> parent(full * n, -1);
  for (int v = 0; v < n; ++v) dp[(std::size_t{1} << v) * n + v] = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int last = 0; last < n; ++last) {
      long cur = dp[mask * n + last];
      if (cur < 0 || !(mask >> last & 1)) continue;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) continue;
        std::size_t next = mask | (std::size_t{1} << v);
        long score = cur + dist[last][v];
        if (score > dp[next * n + v]) {
          dp[next * n + v] = score;
          parent[next * n + v] = static_cast<signed char>(last);
        }
      }
    }
  }

  int last = 0;
  for (int v = 1; v < n; ++v)
    if (dp[(full - 1) * n + v] > dp[(full - 1) * n + last]) last = v;

  OrderingScore result;
  result.score = dp[(full - 1) * n + last];
  std::size_t mask = full - 1;
  while (last >= 0) {
    result.ordering.push_back(last);
    int prev = parent[mask * n + last];
    mask &= ~(std::size_t{1} << last);
    last = prev;
  }
  std::reverse(result.ordering.begin(), result.ordering.end());
  return result;
}

long t_plus_exact_matrix(const std::vector<std::vector<long>>& dist) {
  return t_plus_ordering_matrix(dist).score;
}

namespace {

void check_cap(int n, int cap) {
  if (cap < 2 || cap > 20) throw std::invalid_argument("t_plus cap must be in [2, 20]");
  if (n < 2 || n > cap)
    throw std::invalid_argument("t_plus prefix order must be in [2, cap]");
}

}  // namespace

long t_plus_exact(const DistanceFamily& family, int n, int cap) {
  check_cap(n, cap);
  std::vector<std::vector<long>> dist(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dist[i][j] = dist[j][i] = distance(family, i, j);
  return t_plus_exact_matrix(dist);
}

long t_plus_exact_path(int n, int cap) {
  check_cap(n, cap);
  std::vector<std::vector<long>> dist(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dist[i][j] = std::labs(i - j);
  return t_plus_exact_matrix(dist);
}

}  // namespace radio
