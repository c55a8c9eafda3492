#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cachelab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "p/q" or a plain decimal ("0.125", "-2.5"). Exponents and
/// surrounding whitespace are rejected. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

Integer floor_integer(const Rational& value);
Integer ceil_integer(const Rational& value);

inline Rational floor(const Rational& value) { return Rational(floor_integer(value)); }
inline Rational ceil(const Rational& value) { return Rational(ceil_integer(value)); }

double to_double(const Rational& value);

/// Checked narrowing; throws std::overflow_error.
std::int64_t to_int64(const Integer& value);

/// H_n = 1 + 1/2 + ... + 1/n, exact. H_0 = 0.
Rational harmonic(std::int64_t n);

/// Rational approximation of e from the truncated series sum_{i<=20} 1/i!.
/// Absolute error is below 1e-18.
const Rational& euler_e();

/// e/(e-1) evaluated on euler_e(); error below 1e-17.
const Rational& e_over_e_minus_one();

}  // namespace cachelab
