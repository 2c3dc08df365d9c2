// Exact arbitrary-precision arithmetic helpers shared by all modules.
// Every certificate and every reported ratio is computed in exact rational
// arithmetic; floating point never enters a correctness-relevant path.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace plength {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest integer <= q and smallest integer >= q.
BigInt rational_floor(const Rational& q);
BigInt rational_ceil(const Rational& q);

// Smallest nonnegative integer s with s*s >= n.  Requires n >= 0.
BigInt isqrt_ceil(const BigInt& n);

// A rational upper bound for sqrt(q): for q = p/d (lowest terms),
// sqrt(q) = sqrt(p*d)/d <= isqrt_ceil(p*d)/d.  Requires q >= 0.
Rational sqrt_upper_bound(const Rational& q);

// q^e for integer e (e may be negative; q must be nonzero then).
Rational rational_pow(const Rational& q, long long e);

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string fraction_string(const Rational& q);

// Decimal rendering with a fixed number of significant digits (default 6),
// round-half-away-from-zero, no exponent notation.  "0" for zero.
std::string decimal_string(const Rational& q, int significant_digits = 6);

// Parses "p", "-p", or "p/q" (q > 0 after normalization).  Throws
// std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace plength
