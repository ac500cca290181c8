#include "radio/rational.hpp"

#include <stdexcept>

namespace radio {

long long floor_to_int(const Rational& x) {
  long long q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

long long ceil_to_int(const Rational& x) {
  long long q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() > 0) ++q;
  return q;
}

bool is_integer(const Rational& x) { return x.denominator() == 1; }

long long to_integer(const Rational& x) {
  if (!is_integer(x))
    throw std::logic_error("expected an integral value, got " +
                           std::to_string(x.numerator()) + "/" +
                           std::to_string(x.denominator()));
  return x.numerator();
}

}  // namespace radio
