#include "radio/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace radio {

namespace {

Rational half_sq(int t, int k) {  // t/2 * k^2
  return Rational(t, 2) * Rational(k) * Rational(k);
}

long clamp_ceil(const Rational& x) {
  return std::max(0LL, ceil_to_int(x));
}

}  // namespace

long t_plus_path(int n) {
  if (n < 2) throw std::invalid_argument("t_plus_path requires n >= 2");
  long long nn = static_cast<long long>(n) * n;
  return n % 2 == 0 ? nn / 2 - 1 : (nn - 1) / 2 - 1;
}

Rational le1_traceable_upper(int n, const Rational& alpha, const Rational& beta) {
  if (n < 2) throw std::invalid_argument("le1_traceable_upper requires n >= 2");
  if (alpha <= 0 || beta <= 0)
    throw std::invalid_argument("le1_traceable_upper requires positive alpha and beta");
  return (Rational(static_cast<long long>(n) * n, 2) + alpha * (n - 1) - 1) / beta;
}

long th1_lower(int k, int n, long t_plus) {
  if (k < 1 || n < 2 || t_plus < 0)
    throw std::invalid_argument("th1_lower requires k >= 1, n >= 2, t_plus >= 0");
  return static_cast<long>(n - 1) * (k + 1) - t_plus;
}

long lower_consecutive(int t, int k) {
  if (t < 2 || k < 1)
    throw std::invalid_argument("lower_consecutive requires t >= 2, k >= 1");
  return clamp_ceil(half_sq(t, k) + Rational(1, 2L * t));
}

long lower_one_and_t(int t, int k) {
  if (t < 3) throw std::invalid_argument("lower_one_and_t requires t >= 3");
  if (2 * k < t)
    throw std::invalid_argument("lower_one_and_t is only proven for k >= t/2");
  Rational p = Rational(t) * t / 2 - t + Rational(1, 2);
  Rational q = Rational(t) * t * t / 8 - Rational(t) * t / 2 + Rational(3 * t, 4) -
               Rational(1, 2);
  return clamp_ceil(half_sq(t, k) - p * k + q + Rational(1, 2L * t));
}

long lower_two_consecutive(int t, int k) {
  if (t < 3) throw std::invalid_argument("lower_two_consecutive requires t >= 3");
  if (k < t)
    throw std::invalid_argument("lower_two_consecutive is only proven for k >= t");
  Rational p = Rational(t) * t - t + 1;
  Rational q = Rational(t) * t * t / 2 - Rational(t) * t + Rational(3 * t, 2) - 1;
  return clamp_ceil(half_sq(t, k) - p * k + q + Rational(1, t));
}

long upper_consecutive(int t, int k) {
  if (t < 2 || k < 1)
    throw std::invalid_argument("upper_consecutive requires t >= 2, k >= 1");
  Rational v = k % 2 == 0 ? half_sq(t, k) + k : half_sq(t, k) + Rational(t, 2) * k;
  return to_integer(v);
}

long upper_one_and_t(int t, int k) {
  if (t < 3) throw std::invalid_argument("upper_one_and_t requires t >= 3");
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("upper_one_and_t is only proven for odd k");
  Rational v = t % 2 == 1 ? half_sq(t, k) - Rational(1, 2) : half_sq(t, k);
  return to_integer(v);
}

long upper_two_consecutive_oddk(int t, int k) {
  if (t <= 2) throw std::invalid_argument("upper_two_consecutive_oddk requires t > 2");
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("upper_two_consecutive_oddk is only proven for odd k >= 3");
  return to_integer(half_sq(t, k) + k - Rational(t + 2, 2));
}

BoundRecord best_bounds(const DistanceFamily& family, int k) {
  if (k < 1) throw std::invalid_argument("best_bounds requires k >= 1");
  if (family.kind() == FamilyKind::General)
    throw std::invalid_argument("no analytic bounds for general distance sets");

  const int t = family.t();
  // D(t-1,t) with t = 2 is D(1,2); evaluate it through the consecutive formulas.
  FamilyKind kind = family.kind();
  if (kind == FamilyKind::TwoConsecutive && t == 2) kind = FamilyKind::Consecutive;

  long lower = 0;
  switch (kind) {
    case FamilyKind::Consecutive:
      lower = lower_consecutive(t, k);
      break;
    case FamilyKind::OneAndT:
      if (2 * k >= t) lower = lower_one_and_t(t, k);
      break;
    case FamilyKind::TwoConsecutive:
      if (k >= t) lower = lower_two_consecutive(t, k);
      break;
    case FamilyKind::General:
      break;
  }

  // Every family here is a spanning subgraph of D(1,...,t), so the
  // consecutive upper bounds apply throughout; the family-specific theorems
  // sharpen them where proven.
  long upper = upper_consecutive(t, k);
  if (kind == FamilyKind::OneAndT && k % 2 == 1)
    upper = std::min(upper, upper_one_and_t(t, k));
  if (kind == FamilyKind::TwoConsecutive && k % 2 == 1 && k >= 3)
    upper = std::min(upper, upper_two_consecutive_oddk(t, k));

  BoundRecord record{family, k, lower, upper,
                     LowerProvenance::AnalyticProposition,
                     UpperProvenance::AnalyticTheorem};
  return record;
}

}  // namespace radio
