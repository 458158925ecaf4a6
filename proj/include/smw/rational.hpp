#pragma once
// Exact rational scalars. Values are always normalized: lowest terms,
// positive denominator, zero stored as 0/1.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace smw {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

/// Render as "num" or "num/den" (den > 0, lowest terms).
std::string to_string(const Rational& r);

/// Parse "num" or "num/den", optionally signed. Throws on malformed input.
Rational parse_rational(std::string_view s);

/// Binomial coefficient C(n, k) as an exact integer.
Integer binomial(unsigned n, unsigned k);

}  // namespace smw
