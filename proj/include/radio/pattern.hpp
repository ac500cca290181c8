#pragma once

#include <optional>
#include <vector>

#include "radio/family.hpp"

namespace radio {

/// A finite label block repeated over all integers. Vertices are 1-based as
/// in the two-block constructions: vertex a carries labels[(a-1) mod period].
struct PeriodicPattern {
  DistanceFamily family;
  int k = 1;
  long period = 1;
  std::vector<long> labels;
  long step = 0;  // arithmetic step of the construction; 0 when not applicable

  long span() const;
  long label_of(long vertex) const;  // any integer vertex, 1-based indexing

  bool operator==(const PeriodicPattern&) const = default;
};

/// A pair breaking the radio condition: label_gap + dist <= k.
struct Violation {
  long i = 0;
  long j = 0;
  long label_gap = 0;
  long dist = 0;

  bool operator==(const Violation&) const = default;
};

/// The two-block patterns behind the six closed-form upper bounds, selected
/// by family and the parities of k and t. Combinations without a dedicated
/// construction fall back to the pattern of the consecutive supergraph
/// D(1,...,t), which stays valid on the sparser graph.
PeriodicPattern build_pattern(const DistanceFamily& family, int k);

/// Empty result iff |c_i - c_j| + d(i,j) > k for every pair of integers.
/// Checked finitely: pairs with i in the first period and j - i <= k*maxstep;
/// farther pairs satisfy the condition on distance alone. A rejection carries
/// the lexicographically first violating pair (by i, then j).
std::optional<Violation> verify_periodic(const PeriodicPattern& pattern);

struct CertifiedUpper {
  long span = 0;
  PeriodicPattern pattern;
};

/// build_pattern + verify_periodic. Throws std::logic_error if a built-in
/// pattern fails verification (transcription or distance bug).
CertifiedUpper certified_upper(const DistanceFamily& family, int k);

}  // namespace radio
