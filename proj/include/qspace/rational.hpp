#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qspace {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", plain integers, and decimal/scientific forms ("0.25",
// "2.5e-3"). Every accepted form converts exactly.
std::optional<Rational> parse_rational(std::string_view text);

// "p" when the denominator is 1, else "p/q" in lowest terms.
std::string rational_to_string(const Rational& value);

// base^k by binary exponentiation. k < 0 requires base != 0.
Rational rational_pow(const Rational& base, std::int64_t k);

double rational_to_double(const Rational& value);

// Shortest text that round-trips through binary64.
std::string double_to_string(double value);

// Decimal/scientific forms, plus "p/q" (evaluated as one binary64 division).
std::optional<double> parse_double(std::string_view text);

// Overflow-checked int64 arithmetic for exponent vectors.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace qspace
