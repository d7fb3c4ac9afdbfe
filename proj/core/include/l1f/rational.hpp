#pragma once

#include <gmpxx.h>

#include <string>

namespace l1f {

// Exact arbitrary-precision rational. mpq_class keeps the canonical reduced
// form (gcd(num, den) = 1, den > 0) through every arithmetic operation.
using Rational = mpq_class;

// Builds the canonical rational num/den. den must be nonzero.
Rational make_rational(long num, long den = 1);

// Parses "a", "-a" or "a/b" (arbitrary precision). Throws ParseError.
Rational parse_rational(const std::string& text);

// "a" for integers, "a/b" otherwise. Inverse of parse_rational.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace l1f
