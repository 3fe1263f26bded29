#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bergerspec {

/// Exact rational number. Branch coefficients, squash values x = t^-3 and
/// breakpoints are all carried in this type.
using Rational = boost::multiprecision::cpp_rational;

/// Serializes as "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p", "p/q" or a finite decimal literal such as "-1.25" exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// The exact binary value of a finite double.
Rational rational_from_double(double value);

double to_double(const Rational& value);

}  // namespace bergerspec
