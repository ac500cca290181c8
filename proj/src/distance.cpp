#include "radio/distance.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <vector>

namespace radio {

namespace {

void check_t(int t) {
  if (t < 2) throw std::invalid_argument("distance formulas require t >= 2");
}

void check_delta(long delta) {
  if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
}

}  // namespace

long distance_consecutive(int t, long delta) {
  check_t(t);
  check_delta(delta);
  long q = delta / t, r = delta % t;
  return r == 0 ? q : q + 1;
}

long distance_one_and_t(int t, long delta) {
  check_t(t);
  check_delta(delta);
  if (delta == 0) return 0;
  long q = delta / t, r = delta % t;
  return std::min(q + r, q + 1 + t - r);
}

long distance_two_consecutive(int t, long delta) {
  check_t(t);
  check_delta(delta);
  if (delta == 0) return 0;
  // Solutions of a(t-1) + bt = delta form the line a = -delta + mt,
  // b = delta - m(t-1). |a| + |b| is convex piecewise-linear in m, so the
  // minimum lies between the minimizers of the two terms; scan that interval
  // widened by one on each side.
  long lo = delta / t - 1;
  long hi = (delta + (t - 2)) / (t - 1) + 1;
  long best = delta + t;  // q + t is always achievable
  for (long m = lo; m <= hi; ++m) {
    long a = -delta + m * t;
    long b = delta - m * (t - 1);
    best = std::min(best, std::labs(a) + std::labs(b));
  }
  return best;
}

long distance_upper_two_consecutive(int t, long delta) {
  check_t(t);
  check_delta(delta);
  return delta / t + t;
}

long distance_oracle(const DistanceFamily& family, long delta,
                     const OracleLimits& limits) {
  check_delta(delta);
  if (delta == 0) return 0;
  const long m = family.maxstep();
  const long w = m * m + m * ((delta + m - 1) / m);
  const long lo = -w, hi = delta + w;
  const long size = hi - lo + 1;
  if (size > limits.max_window)
    throw std::invalid_argument("distance_oracle window exceeds the configured cap");

  std::vector<long> dist(size, -1);
  std::deque<long> queue;
  dist[-lo] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    long v = queue.front();
    queue.pop_front();
    if (v == delta) return dist[v - lo];
    for (long d : family.dset()) {
      for (long u : {v - d, v + d}) {
        if (u < lo || u > hi || dist[u - lo] >= 0) continue;
        dist[u - lo] = dist[v - lo] + 1;
        queue.push_back(u);
      }
    }
  }
  throw std::logic_error("distance_oracle window missed the target vertex");
}

long distance(const DistanceFamily& family, long i, long j) {
  long delta = std::labs(i - j);
  switch (family.kind()) {
    case FamilyKind::Consecutive:
      return distance_consecutive(family.t(), delta);
    case FamilyKind::OneAndT:
      return distance_one_and_t(family.t(), delta);
    case FamilyKind::TwoConsecutive:
      return distance_two_consecutive(family.t(), delta);
    case FamilyKind::General:
      return distance_oracle(family, delta);
  }
  throw std::logic_error("unreachable family kind");
}

}  // namespace radio
