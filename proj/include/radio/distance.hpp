#pragma once

#include "radio/family.hpp"

namespace radio {

// Exact vertex distances in the infinite graphs. All take the index gap
// |i - j| and are insensitive to translation.
long distance_consecutive(int t, long delta);            // q if r = 0, else q + 1
long distance_one_and_t(int t, long delta);              // min(q + r, q + 1 + t - r)
long distance_two_consecutive(int t, long delta);        // min |a|+|b| with a(t-1)+bt = delta
long distance_upper_two_consecutive(int t, long delta);  // q + t, never below the exact value

struct OracleLimits {
  long max_window = 1L << 22;  // cap on the BFS window size
};

/// Breadth-first search over the window [-W, delta + W] with
/// W = m^2 + m*ceil(delta/m), m = maxstep. Independent of the closed forms;
/// also the only distance route for General sets.
long distance_oracle(const DistanceFamily& family, long delta,
                     const OracleLimits& limits = {});

/// Dispatch on family kind; General goes through the oracle.
long distance(const DistanceFamily& family, long i, long j);

}  // namespace radio
