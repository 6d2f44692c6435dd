#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rook {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" with q > 1 omitted when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", or "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// Decimal rendering of a rational with the given count of digits after the
// point, rounded toward zero.
std::string to_decimal(const Rational& r, unsigned digits);

}  // namespace rook
