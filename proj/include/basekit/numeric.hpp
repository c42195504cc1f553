#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace basekit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "a/b" or "a" (decimal strings, optional leading '-').
Rational parse_rational(const std::string& text);

/// Render as "num/den" ("num" when the denominator is 1).
std::string format_rational(const Rational& r);

/// Floor of the integer square root; requires n >= 0.
BigInt isqrt_floor(const BigInt& n);

}  // namespace basekit
