#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace netpot {

// Arbitrary-precision exact arithmetic. Every quantity in the library is a
// Rational kept in lowest terms with positive denominator; no floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses the canonical form. Throws ParseError on malformed input or a
/// zero denominator.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& r);

/// Numerator of an integral rational. Caller must check is_integer first.
Integer to_integer(const Rational& r);

}  // namespace netpot
