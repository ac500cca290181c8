#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "radio/bounds.hpp"
#include "radio/family.hpp"
#include "radio/pattern.hpp"

namespace radio {

class ResultCache;

struct SearchConfig {
  int max_prefix = 64;       // consecutive vertices the prefix search labels
  long span_ceiling = 63;    // largest label any engine accepts (mask width)
  std::uint64_t node_budget = 10'000'000;
  std::chrono::milliseconds time_budget{30'000};
  int threads = 0;  // 0 = OpenMP default

  void validate() const;  // throws std::invalid_argument on nonpositive budgets
};

struct ProofOutcome {
  enum class Verdict { ProvenGreaterThan, Inconclusive };
  enum class Reason { Exhausted, WitnessFound, BudgetExhausted };

  Verdict verdict = Verdict::Inconclusive;
  Reason reason = Reason::BudgetExhausted;
  long l = 0;           // label ceiling the search ran with
  int prefix_used = 0;  // shortest prefix admitting no valid labeling (proven case)
  std::optional<std::vector<long>> witness;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;

  bool proven() const { return verdict == Verdict::ProvenGreaterThan; }
};

/// Exhaustive prefix search: try to label config.max_prefix consecutive
/// vertices with labels in [0, l], the first vertex pinned to 0, under the
/// radio condition with infinite-graph distances. Exhaustion proves
/// rl_k > l (ProvenGreaterThan); a completed prefix is returned as an
/// Inconclusive witness. Pinning label 0 is sound: a span-l labeling of the
/// whole graph attains label 0 somewhere (otherwise all labels could be
/// decreased), and translating the window to start there changes nothing.
///
/// Parallel over the second vertex's label choices. Verdict and witness are
/// schedule-independent; the node budget applies per root branch.
ProofOutcome prove_lower(const DistanceFamily& family, int k, long l,
                         const SearchConfig& config);

/// Single-threaded reference engine, same contract with one global node
/// budget. Kept for testing and benchmarking against the parallel engine.
ProofOutcome prove_lower_serial(const DistanceFamily& family, int k, long l,
                                const SearchConfig& config);

/// A vertex ordering with its score: the sum of consecutive pairwise
/// distances. The traceable number is the maximum score over all orderings.
struct OrderingScore {
  std::vector<int> ordering;  // permutation of 0..n-1
  long score = 0;
};

// Exact upper traceable number by dynamic programming over (subset, last)
// states; n is capped (default 16). The _ordering variant also reconstructs
// a maximizing ordering.
OrderingScore t_plus_ordering_matrix(const std::vector<std::vector<long>>& dist);
long t_plus_exact_matrix(const std::vector<std::vector<long>>& dist);
long t_plus_exact(const DistanceFamily& family, int n, int cap = 16);
long t_plus_exact_path(int n, int cap = 16);

/// Depth-first search for a periodic pattern with span <= span_ceiling over
/// the candidate periods, in order. Position 0 is pinned to label 0 (any
/// valid pattern can be shifted and rotated into that form), labels ascend,
/// and wraparound pairs across the period seam are enforced during
/// construction. The first hit is re-verified with verify_periodic before
/// being returned; budget exhaustion yields an empty result, never a bound.
std::optional<PeriodicPattern> find_pattern(const DistanceFamily& family, int k,
                                            long span_ceiling,
                                            const std::vector<long>& periods,
                                            const SearchConfig& config);

std::vector<long> default_periods(const DistanceFamily& family, int k);   // kt+1 .. kt+t+3
std::vector<long> extended_periods(const DistanceFamily& family, int k);  // 2 .. 2(kt+t+3)

struct ExactValueResult {
  BoundRecord record;
  std::optional<PeriodicPattern> pattern;  // certificate of record.upper
  bool exact = false;                      // lower == upper
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

/// Close one cell: push the certified upper bound down with find_pattern,
/// climb the lower bound by prefix proofs starting one below the analytic
/// floor. Search outcomes may come from / go to the optional cache.
ExactValueResult exact_value(const DistanceFamily& family, int k,
                             const SearchConfig& config,
                             ResultCache* cache = nullptr);

}  // namespace radio
