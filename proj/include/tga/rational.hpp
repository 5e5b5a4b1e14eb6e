#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tga {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// base^exp with exp >= 0, exact.
Rational rational_pow(const Rational& base, int exp);

/// Largest integer strictly below value. For an integer value this is
/// value - 1; otherwise the usual floor.
long long floor_strict(const Rational& value);

/// Parses "p/q" or a plain integer "p".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);

}  // namespace tga
