#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace hombracket {

// The scalar field. Exact arbitrary-precision fractions, always reduced to
// lowest terms with positive denominator, so equality is plain operator==.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Shorthand for building small constants: rat(1,2) == 1/2.
inline Rational rat(long long num, long long den = 1) {
    return Rational(num, den);
}

/// Parses "p/q" or "p", optional leading '-' (ASCII or U+2212).
/// Throws ParseError on anything else, including zero denominators.
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

} // namespace hombracket
