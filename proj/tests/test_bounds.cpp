#include <doctest.h>

#include <stdexcept>

#include "radio/bounds.hpp"

using namespace radio;

TEST_CASE("rational helpers") {
  CHECK(ceil_to_int(Rational(7, 2)) == 4);
  CHECK(ceil_to_int(Rational(-7, 2)) == -3);
  CHECK(ceil_to_int(Rational(6, 3)) == 2);
  CHECK(floor_to_int(Rational(7, 2)) == 3);
  CHECK(floor_to_int(Rational(-7, 2)) == -4);
  CHECK(is_integer(Rational(8, 4)));
  CHECK(!is_integer(Rational(1, 3)));
  CHECK(to_integer(Rational(10, 2)) == 5);
  CHECK_THROWS_AS(to_integer(Rational(1, 2)), std::logic_error);
}

TEST_CASE("path traceable number") {
  const long expected[] = {1, 3, 7, 11, 17, 23, 31, 39, 49, 59, 71};  // n = 2..12
  for (int n = 2; n <= 12; ++n) CHECK(t_plus_path(n) == expected[n - 2]);
  CHECK_THROWS_AS(t_plus_path(1), std::invalid_argument);
}

TEST_CASE("traceable upper bound from a linear distance estimate") {
  CHECK(le1_traceable_upper(4, Rational(1), Rational(2)) == Rational(5));
  CHECK(le1_traceable_upper(2, Rational(1), Rational(1)) == Rational(2));
  CHECK(le1_traceable_upper(7, Rational(2), Rational(3)) == Rational(71, 6));
  CHECK(le1_traceable_upper(5, Rational(1), Rational(2)) == Rational(31, 4));
  CHECK_THROWS_AS(le1_traceable_upper(4, Rational(0), Rational(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(le1_traceable_upper(4, Rational(1), Rational(-1)),
                  std::invalid_argument);
}

TEST_CASE("ordering-based lower bound") {
  CHECK(th1_lower(2, 4, 7) == 2);
  CHECK(th1_lower(1, 2, 1) == 1);
  CHECK(th1_lower(3, 7, 11) == 13);
  CHECK(th1_lower(1, 2, 5) == -3);  // vacuous but defined
}

TEST_CASE("lower bound formulas, exact rational evaluation") {
  CHECK(lower_consecutive(2, 3) == 10);
  CHECK(lower_consecutive(2, 1) == 2);
  CHECK(lower_consecutive(3, 2) == 7);
  CHECK(lower_consecutive(2, 2) == 5);

  CHECK(lower_one_and_t(3, 2) == 3);
  CHECK(lower_one_and_t(3, 4) == 17);
  CHECK(lower_one_and_t(4, 2) == 2);
  CHECK(lower_one_and_t(3, 3) == 9);
  CHECK(lower_one_and_t(9, 9) == 134);

  CHECK(lower_two_consecutive(3, 3) == 1);
  CHECK(lower_two_consecutive(3, 4) == 5);
  CHECK(lower_two_consecutive(4, 4) == 2);
  CHECK(lower_two_consecutive(3, 5) == 11);
  CHECK(lower_two_consecutive(9, 9) == 4);

  CHECK_THROWS_AS(lower_consecutive(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(lower_one_and_t(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(lower_one_and_t(5, 2), std::invalid_argument);  // k < t/2
  CHECK_THROWS_AS(lower_two_consecutive(4, 3), std::invalid_argument);  // k < t
}

TEST_CASE("upper bound formulas, integrality asserted") {
  CHECK(upper_consecutive(2, 2) == 6);
  CHECK(upper_consecutive(2, 3) == 12);
  CHECK(upper_consecutive(3, 3) == 18);
  CHECK(upper_consecutive(3, 2) == 8);
  CHECK(upper_consecutive(9, 6) == 168);

  CHECK(upper_one_and_t(3, 3) == 13);
  CHECK(upper_one_and_t(4, 3) == 18);
  CHECK(upper_one_and_t(3, 1) == 1);
  CHECK(upper_one_and_t(9, 5) == 112);

  CHECK(upper_two_consecutive_oddk(3, 3) == 14);
  CHECK(upper_two_consecutive_oddk(3, 5) == 40);
  CHECK(upper_two_consecutive_oddk(5, 3) == 22);
  CHECK(upper_two_consecutive_oddk(7, 7) == 174);

  CHECK_THROWS_AS(upper_one_and_t(3, 2), std::invalid_argument);  // even k
  CHECK_THROWS_AS(upper_two_consecutive_oddk(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(upper_two_consecutive_oddk(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(upper_two_consecutive_oddk(3, 4), std::invalid_argument);
}

TEST_CASE("best_bounds picks the sharpest applicable formulas") {
  auto r = best_bounds(DistanceFamily::consecutive(2), 2);
  CHECK(r.lower == 5);
  CHECK(r.upper == 6);
  CHECK(r.lower_provenance == LowerProvenance::AnalyticProposition);
  CHECK(r.upper_provenance == UpperProvenance::AnalyticTheorem);

  CHECK(best_bounds(DistanceFamily::one_and_t(3), 3).upper == 13);
  CHECK(best_bounds(DistanceFamily::two_consecutive(3), 3).upper == 14);

  // out-of-range propositions are skipped, not extrapolated
  CHECK(best_bounds(DistanceFamily::one_and_t(9), 2).lower == 0);
  CHECK(best_bounds(DistanceFamily::two_consecutive(4), 2).lower == 0);

  // D(1,2) under its two-consecutive name
  for (int k = 1; k <= 9; ++k) {
    auto a = best_bounds(DistanceFamily::two_consecutive(2), k);
    auto b = best_bounds(DistanceFamily::consecutive(2), k);
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
  }

  CHECK_THROWS_AS(best_bounds(DistanceFamily::general({2, 3}), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(best_bounds(DistanceFamily::consecutive(2), 0),
                  std::invalid_argument);
}

TEST_CASE("analytic lower never beats analytic upper on the grid") {
  for (int t = 2; t <= 9; ++t)
    for (int k = 1; k <= 9; ++k) {
      auto c = best_bounds(DistanceFamily::consecutive(t), k);
      CHECK(c.lower <= c.upper.value());
      if (t >= 3) {
        auto o = best_bounds(DistanceFamily::one_and_t(t), k);
        CHECK(o.lower <= o.upper.value());
        auto w = best_bounds(DistanceFamily::two_consecutive(t), k);
        CHECK(w.lower <= w.upper.value());
      }
    }
}

TEST_CASE("the t = 2 bounds collapse to k^2 + 1 and k^2 + k") {
  for (int k = 1; k <= 9; ++k) {
    CHECK(lower_consecutive(2, k) == static_cast<long>(k) * k + 1);
    long upper = upper_consecutive(2, k);
    if (k % 2 == 1)
      CHECK(upper == static_cast<long>(k) * k + k);
    else
      CHECK(upper <= static_cast<long>(k) * k + 2 * k);
  }
}
