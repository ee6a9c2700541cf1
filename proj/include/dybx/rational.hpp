#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dybx {

/// Arbitrary precision rational, always canonical (den > 0, gcd = 1).
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or q == 0.
Rational parseRational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string toString(const Rational& q);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

inline bool isZero(const Rational& q) { return sgn(q) == 0; }

} // namespace dybx
