#include "qspace/rational.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "qspace/error.hpp"

namespace qspace {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads [sign] digits [. digits] [e/E [sign] digits] or [sign] digits / digits.
// Returns false on any malformed or trailing input.
struct NumberParts {
  bool negative = false;
  std::string int_digits;
  std::string frac_digits;
  std::int64_t exponent10 = 0;
  bool has_slash = false;
  std::string den_digits;
};

bool scan_number(std::string_view text, NumberParts& out) {
  std::size_t i = 0;
  auto eof = [&] { return i >= text.size(); };
  if (!eof() && (text[i] == '+' || text[i] == '-')) {
    out.negative = text[i] == '-';
    ++i;
  }
  while (!eof() && is_digit(text[i])) out.int_digits.push_back(text[i++]);
  if (!eof() && text[i] == '/') {
    if (out.int_digits.empty()) return false;
    ++i;
    while (!eof() && is_digit(text[i])) out.den_digits.push_back(text[i++]);
    if (out.den_digits.empty() || !eof()) return false;
    out.has_slash = true;
    return true;
  }
  if (!eof() && text[i] == '.') {
    ++i;
    while (!eof() && is_digit(text[i])) out.frac_digits.push_back(text[i++]);
  }
  if (out.int_digits.empty() && out.frac_digits.empty()) return false;
  if (!eof() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (!eof() && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    std::string exp_digits;
    while (!eof() && is_digit(text[i])) exp_digits.push_back(text[i++]);
    if (exp_digits.empty() || exp_digits.size() > 4) return false;
    out.exponent10 = std::strtol(exp_digits.c_str(), nullptr, 10);
    if (exp_neg) out.exponent10 = -out.exponent10;
  }
  return eof();
}

Integer pow10(std::int64_t k) {
  assert(k >= 0);
  Integer r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  NumberParts parts;
  if (!scan_number(text, parts)) return std::nullopt;
  if (parts.has_slash) {
    Integer num(parts.int_digits);
    Integer den(parts.den_digits);
    if (den == 0) return std::nullopt;
    if (parts.negative) num = -num;
    return Rational(num, den);
  }
  Integer num(parts.int_digits.empty() ? "0" : parts.int_digits);
  for (char c : parts.frac_digits) num = num * 10 + (c - '0');
  Integer den = pow10(static_cast<std::int64_t>(parts.frac_digits.size()));
  if (parts.exponent10 > 0) {
    num *= pow10(parts.exponent10);
  } else if (parts.exponent10 < 0) {
    den *= pow10(-parts.exponent10);
  }
  if (parts.negative) num = -num;
  return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) {
    s += '/';
    s += denominator(value).str();
  }
  return s;
}

Rational rational_pow(const Rational& base, std::int64_t k) {
  if (k == 0) return Rational(1);
  Rational b = base;
  std::uint64_t n;
  if (k < 0) {
    if (base == 0) throw InternalError("rational_pow: negative power of zero");
    b = Rational(1) / base;
    n = std::uint64_t(0) - static_cast<std::uint64_t>(k);
  } else {
    n = static_cast<std::uint64_t>(k);
  }
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

double rational_to_double(const Rational& value) {
  const Integer& num = numerator(value);
  const Integer& den = denominator(value);
  // A single IEEE division rounds correctly, but only when both operands are
  // themselves exact doubles, i.e. within +-2^53.
  constexpr std::int64_t exact_bound = std::int64_t(1) << 53;
  if (num >= -exact_bound && num <= exact_bound && den <= exact_bound) {
    return static_cast<double>(num.convert_to<std::int64_t>()) /
           static_cast<double>(den.convert_to<std::int64_t>());
  }
  return value.convert_to<double>();
}

std::string double_to_string(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  assert(ec == std::errc());
  return std::string(buf, ptr);
}

std::optional<double> parse_double(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto p = parse_double(text.substr(0, slash));
    auto q = parse_double(text.substr(slash + 1));
    if (!p || !q || *q == 0.0) return std::nullopt;
    return *p / *q;
  }
  std::string_view body = text;
  double sign = 1.0;
  if (body.front() == '+') {
    body.remove_prefix(1);
  } else if (body.front() == '-') {
    sign = -1.0;
    body.remove_prefix(1);
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size()) return std::nullopt;
  return sign * value;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorCode::ExponentOverflow, "exponent overflow in addition");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r))
    fail(ErrorCode::ExponentOverflow, "exponent overflow in negation");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorCode::ExponentOverflow, "exponent overflow in multiplication");
  return r;
}

}  // namespace qspace
