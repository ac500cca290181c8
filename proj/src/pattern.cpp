#include "radio/pattern.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "radio/distance.hpp"

namespace radio {

long PeriodicPattern::span() const {
  if (labels.empty()) return 0;
  auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
  return *hi - *lo;
}

long PeriodicPattern::label_of(long vertex) const {
  long r = (vertex - 1) % period;
  if (r < 0) r += period;
  return labels[static_cast<std::size_t>(r)];
}

namespace {

long exact_half(long x, const char* what) {
  if (x % 2 != 0)
    throw std::logic_error(std::string(what) + " is not even: " + std::to_string(x));
  return x / 2;
}

PeriodicPattern two_block(const DistanceFamily& family, int k, long period,
                          long block1, long step, long offset) {
  if (block1 < 1 || block1 > period)
    throw std::logic_error("pattern block length out of range");
  std::vector<long> labels(static_cast<std::size_t>(period));
  for (long i = 0; i < block1; ++i) labels[i] = i * step;
  for (long j = 0; block1 + j < period; ++j) labels[block1 + j] = offset + j * step;
  return PeriodicPattern{family, k, period, std::move(labels), step};
}

// The pattern of the consecutive supergraph D(1,...,t); valid for the
// sparser families because their distances are never smaller.
PeriodicPattern consecutive_pattern(const DistanceFamily& family, int t, int k) {
  long tk = static_cast<long>(t) * k;
  if (k % 2 == 0) {
    // even k: period tk+3, first block 0, k, ..., (tk/2 + 1)k, then offset k/2
    return two_block(family, k, tk + 3, tk / 2 + 2, k, exact_half(k, "step"));
  }
  long step = k + 1;
  long offset = exact_half(step, "step");
  if (t % 2 == 0)
    return two_block(family, k, tk + 1, tk / 2 + 1, step, offset);
  return two_block(family, k, tk + 1, exact_half(tk + 1, "block length"), step, offset);
}

}  // namespace

PeriodicPattern build_pattern(const DistanceFamily& family, int k) {
  if (k < 1) throw std::invalid_argument("build_pattern requires k >= 1");
  if (family.kind() == FamilyKind::General)
    throw std::invalid_argument("no pattern construction for general distance sets");

  const int t = family.t();
  const long tk = static_cast<long>(t) * k;

  switch (family.kind()) {
    case FamilyKind::Consecutive:
      return consecutive_pattern(family, t, k);

    case FamilyKind::OneAndT:
      if (k % 2 == 0) return consecutive_pattern(family, t, k);
      // odd k: period tk+1, step k, second block offset (k-1)/2
      if (t % 2 == 1)
        return two_block(family, k, tk + 1, exact_half(tk + 1, "block length"), k,
                         exact_half(k - 1, "offset"));
      return two_block(family, k, tk + 1, tk / 2 + 1, k, exact_half(k - 1, "offset"));

    case FamilyKind::TwoConsecutive:
      // D(1,2) itself, and the combinations the dedicated construction does
      // not cover, reuse the consecutive patterns.
      if (t == 2 || k % 2 == 0 || k < 3) return consecutive_pattern(family, t, k);
      // odd k >= 3, t > 2: period tk+t+3, step k-1, offset (k-1)/2
      return two_block(family, k, tk + t + 3, exact_half(tk + t + 4, "block length"),
                       k - 1, exact_half(k - 1, "offset"));

    case FamilyKind::General:
      break;
  }
  throw std::logic_error("unreachable family kind");
}

std::optional<Violation> verify_periodic(const PeriodicPattern& pattern) {
  if (pattern.k < 1) throw std::invalid_argument("pattern k must be >= 1");
  if (pattern.period < 1 ||
      pattern.labels.size() != static_cast<std::size_t>(pattern.period))
    throw std::invalid_argument("pattern labels must match the period");
  for (long c : pattern.labels)
    if (c < 0) throw std::invalid_argument("pattern labels must be nonnegative");

  const long P = pattern.period;
  const long horizon = static_cast<long>(pattern.k) * pattern.family.maxstep();
  if (horizon > (8L << 20))
    throw std::invalid_argument("k * maxstep too large to verify");

  // Pairs farther apart than the horizon satisfy the radio condition on
  // distance alone: d >= ceil(delta/maxstep) > k.
  std::vector<long> dist_at(horizon + 1, 0);
  long effective = 0;
  for (long delta = 1; delta <= horizon; ++delta) {
    dist_at[delta] = distance(pattern.family, 0, delta);
    if (pattern.k + 1 - dist_at[delta] > 0) effective = delta;
  }

  const auto& labels = pattern.labels;
  auto violation_at = [&](long i) -> std::optional<Violation> {
    // i is a 1-based vertex in the first period; scan partners in order.
    long ci = labels[i - 1];
    for (long delta = 1; delta <= effective; ++delta) {
      long cj = labels[(i - 1 + delta) % P];
      long gap = std::labs(ci - cj);
      if (gap + dist_at[delta] <= pattern.k)
        return Violation{i, i + delta, gap, dist_at[delta]};
    }
    return std::nullopt;
  };

  if (P * effective < (1L << 14)) {
    for (long i = 1; i <= P; ++i)
      if (auto v = violation_at(i)) return v;
    return std::nullopt;
  }

  // Parallel scan; the winner is still the lexicographically first pair.
  std::optional<Violation> best;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::optional<Violation> local;
#pragma omp for schedule(static) nowait
    for (long i = 1; i <= P; ++i) {
      if (local && local->i < i) continue;
      if (auto v = violation_at(i))
        if (!local || v->i < local->i) local = v;
    }
#pragma omp critical(radio_verify_reduce)
    {
      if (local && (!best || local->i < best->i)) best = local;
    }
  }
#else
  for (long i = 1; i <= P; ++i)
    if (auto v = violation_at(i)) { best = v; break; }
#endif
  return best;
}

CertifiedUpper certified_upper(const DistanceFamily& family, int k) {
  PeriodicPattern pattern = build_pattern(family, k);
  if (auto v = verify_periodic(pattern))
    throw std::logic_error("built-in pattern for " + family.name() + ", k=" +
                           std::to_string(k) + " failed verification at pair (" +
                           std::to_string(v->i) + "," + std::to_string(v->j) + ")");
  long span = pattern.span();
  return CertifiedUpper{span, std::move(pattern)};
}

}  // namespace radio
