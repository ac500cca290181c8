#pragma once

#include <boost/rational.hpp>

namespace radio {

// Every bound formula is evaluated exactly; no floating point anywhere.
using Rational = boost::rational<long long>;

long long floor_to_int(const Rational& x);
long long ceil_to_int(const Rational& x);
bool is_integer(const Rational& x);

// Throws std::logic_error when x is not integral.
long long to_integer(const Rational& x);

}  // namespace radio
