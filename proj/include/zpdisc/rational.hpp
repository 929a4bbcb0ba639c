#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zpdisc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_pow(std::uint64_t base, unsigned exponent);

/// base^{-exponent} as an exact rational.
Rational inverse_pow(std::uint64_t base, unsigned exponent);

/// "num/den" with den > 0; integers render as "n/1".
std::string to_fraction_string(const Rational& r);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const Rational& r, int significant = 12);

double to_double(const Rational& r);

/// Parses "num/den" or a bare integer.
Rational parse_fraction(const std::string& text);

}  // namespace zpdisc
