#pragma once

#include <optional>

#include "radio/family.hpp"
#include "radio/rational.hpp"

namespace radio {

enum class LowerProvenance { AnalyticProposition, PrefixSearchProof, ReferenceTable };
enum class UpperProvenance { AnalyticTheorem, VerifiedPattern, ReferenceTable };

/// A (lower, upper) pair for rl_k of one distance graph, with the origin of
/// each side. upper is empty when no formula or certificate applies.
struct BoundRecord {
  DistanceFamily family;
  int k = 1;
  long lower = 0;
  std::optional<long> upper;
  LowerProvenance lower_provenance = LowerProvenance::AnalyticProposition;
  UpperProvenance upper_provenance = UpperProvenance::AnalyticTheorem;

  bool operator==(const BoundRecord&) const = default;
};

/// Upper traceable number of the path P_n: n^2/2 - 1 for even n,
/// (n^2-1)/2 - 1 for odd n.
long t_plus_path(int n);

/// (n^2/2 + alpha(n-1) - 1) / beta. Valid as a bound on the traceable number
/// whenever d(i,j) <= (j - i + alpha)/beta holds for all 0 <= i < j <= n-1;
/// that hypothesis is the caller's to establish.
Rational le1_traceable_upper(int n, const Rational& alpha, const Rational& beta);

/// (n-1)(k+1) - t_plus; may be negative (vacuous).
long th1_lower(int k, int n, long t_plus);

// Lower bounds on rl_k, one per family. Each is the ceiling of the exact
// rational value and is clamped at zero. The latter two are only proven on a
// restricted k-range and throw outside it.
long lower_consecutive(int t, int k);        // t >= 2, k >= 1
long lower_one_and_t(int t, int k);          // t >= 3, 2k >= t
long lower_two_consecutive(int t, int k);    // t >= 3, k >= t

// Upper bounds on rl_k. Values are exact integers for every admissible
// parity combination; integrality is asserted.
long upper_consecutive(int t, int k);          // any k >= 1
long upper_one_and_t(int t, int k);            // t >= 3, odd k
long upper_two_consecutive_oddk(int t, int k); // t > 2, odd k >= 3

/// Sharpest analytic bounds for one cell: max of the applicable lower
/// formulas, min of the applicable upper formulas. TwoConsecutive(2) is the
/// same graph as Consecutive(2) and is evaluated as such. Throws for General
/// families (no formula applies).
BoundRecord best_bounds(const DistanceFamily& family, int k);

}  // namespace radio
