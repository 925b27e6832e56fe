#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace moduli {

// All coefficient arithmetic in this library is exact. Rational numbers are
// stored in lowest terms with positive denominator; no floating point is used
// anywhere in the computational core.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p/q" with q > 0 in lowest terms; integers render as "p/1" when
// `always_slash` is set (the serialization format) and as "p" otherwise.
std::string to_fraction(const Rational& r, bool always_slash = true);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or q = 0.
Rational parse_fraction(const std::string& s);

// Exact binomial coefficient; zero outside the usual range.
Rational binomial(long n, long k);

// Deterministic trial-division primality; inputs in this library never exceed
// a few hundred.
bool is_prime(long x);

}  // namespace moduli
