#include "qspace/scalar.hpp"

#include <array>
#include <cassert>
#include <cmath>

namespace qspace {

namespace {

constexpr std::size_t system_count = 6;

constexpr std::array<ScalarSystemInfo, system_count> infos{{
    {"Field-Rational", true, true, true},
    {"Field-Real", true, true, false},
    {"NonNegative-Rational", true, false, true},
    {"NonNegative-Real", true, false, false},
    {"Positive-Rational", false, false, true},
    {"Positive-Real", false, false, false},
}};

bool member_rational(ScalarSystem system, const Rational& v) {
  switch (system) {
    case ScalarSystem::FieldRational:
      return true;
    case ScalarSystem::NonNegativeRational:
      return v >= 0;
    case ScalarSystem::PositiveRational:
      return v > 0;
    default:
      return false;
  }
}

bool member_real(ScalarSystem system, double v) {
  if (!std::isfinite(v)) return false;
  switch (system) {
    case ScalarSystem::FieldReal:
      return true;
    case ScalarSystem::NonNegativeReal:
      return v >= 0;
    case ScalarSystem::PositiveReal:
      return v > 0;
    default:
      return false;
  }
}

void require_same_system(const Scalar& a, const Scalar& b) {
  if (a.system() != b.system())
    fail(ErrorCode::SystemMismatch,
         std::string("scalar systems differ: ") +
             std::string(scalar_system_info(a.system()).name) + " vs " +
             std::string(scalar_system_info(b.system()).name));
}

}  // namespace

const ScalarSystemInfo& scalar_system_info(ScalarSystem system) {
  return infos[static_cast<std::size_t>(system)];
}

std::optional<ScalarSystem> scalar_system_from_name(std::string_view name) {
  for (std::size_t i = 0; i < system_count; ++i)
    if (infos[i].name == name) return static_cast<ScalarSystem>(i);
  return std::nullopt;
}

ScalarSystem exact_twin(ScalarSystem system) {
  switch (system) {
    case ScalarSystem::FieldReal:
      return ScalarSystem::FieldRational;
    case ScalarSystem::NonNegativeReal:
      return ScalarSystem::NonNegativeRational;
    case ScalarSystem::PositiveReal:
      return ScalarSystem::PositiveRational;
    default:
      return system;
  }
}

ScalarSystem floating_twin(ScalarSystem system) {
  switch (system) {
    case ScalarSystem::FieldRational:
      return ScalarSystem::FieldReal;
    case ScalarSystem::NonNegativeRational:
      return ScalarSystem::NonNegativeReal;
    case ScalarSystem::PositiveRational:
      return ScalarSystem::PositiveReal;
    default:
      return system;
  }
}

Scalar Scalar::checked(ScalarSystem system, std::variant<Rational, double> value) {
  if (std::holds_alternative<Rational>(value)) {
    if (!member_rational(system, std::get<Rational>(value)))
      fail(ErrorCode::Domain,
           rational_to_string(std::get<Rational>(value)) + " is not a member of " +
               std::string(scalar_system_info(system).name));
  } else {
    if (!member_real(system, std::get<double>(value)))
      fail(ErrorCode::Domain,
           double_to_string(std::get<double>(value)) + " is not a member of " +
               std::string(scalar_system_info(system).name));
  }
  return Scalar(system, std::move(value));
}

// Results of closed operations: a violation on the exact backend is a logic
// bug; the floating backend is checked in debug builds only.
Scalar Scalar::closed(ScalarSystem system, std::variant<Rational, double> value) {
  if (std::holds_alternative<Rational>(value)) {
    if (!member_rational(system, std::get<Rational>(value)))
      throw InternalError("scalar operation left its domain: " +
                          rational_to_string(std::get<Rational>(value)));
  } else {
    assert(member_real(system, std::get<double>(value)));
  }
  return Scalar(system, std::move(value));
}

Scalar Scalar::from_rational(Rational value, ScalarSystem system) {
  if (scalar_system_info(system).exact) return checked(system, std::move(value));
  return checked(system, rational_to_double(value));
}

Scalar Scalar::from_real(double value, ScalarSystem system) {
  if (!scalar_system_info(system).exact) return checked(system, value);
  if (!std::isfinite(value))
    fail(ErrorCode::Domain, "non-finite value cannot enter an exact system");
  return checked(system, Rational(value));
}

Scalar Scalar::from_int(std::int64_t value, ScalarSystem system) {
  if (scalar_system_info(system).exact) return checked(system, Rational(value));
  return checked(system, static_cast<double>(value));
}

Scalar Scalar::parse(std::string_view text, ScalarSystem system) {
  if (scalar_system_info(system).exact) {
    auto r = parse_rational(text);
    if (!r) fail(ErrorCode::Syntax, "malformed number: '" + std::string(text) + "'");
    return checked(system, std::move(*r));
  }
  auto d = parse_double(text);
  if (!d) fail(ErrorCode::Syntax, "malformed number: '" + std::string(text) + "'");
  return checked(system, *d);
}

Scalar Scalar::one(ScalarSystem system) { return from_int(1, system); }

Scalar Scalar::zero(ScalarSystem system) {
  if (!scalar_system_info(system).has_zero)
    fail(ErrorCode::UnsupportedZero,
         std::string(scalar_system_info(system).name) + " has no zero");
  return from_int(0, system);
}

bool Scalar::exact() const noexcept { return scalar_system_info(system_).exact; }

bool Scalar::is_zero() const noexcept {
  return exact() ? std::get<Rational>(value_) == 0 : std::get<double>(value_) == 0.0;
}

bool Scalar::is_one() const noexcept {
  return exact() ? std::get<Rational>(value_) == 1 : std::get<double>(value_) == 1.0;
}

const Rational& Scalar::rational() const {
  if (!exact()) throw InternalError("rational() on a floating scalar");
  return std::get<Rational>(value_);
}

double Scalar::real() const {
  if (exact()) throw InternalError("real() on an exact scalar");
  return std::get<double>(value_);
}

double Scalar::to_double() const {
  return exact() ? rational_to_double(std::get<Rational>(value_))
                 : std::get<double>(value_);
}

std::string Scalar::str() const {
  return exact() ? rational_to_string(std::get<Rational>(value_))
                 : double_to_string(std::get<double>(value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.system_ != b.system_) return false;
  return a.value_ == b.value_;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_system(a, b);
  if (a.exact()) return Scalar::closed(a.system_, a.rational() + b.rational());
  return Scalar::closed(a.system_, a.real() + b.real());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_system(a, b);
  if (a.exact()) return Scalar::closed(a.system_, a.rational() * b.rational());
  return Scalar::closed(a.system_, a.real() * b.real());
}

Scalar operator-(const Scalar& a) {
  if (!scalar_system_info(a.system_).has_negation)
    fail(ErrorCode::UnsupportedNegation,
         std::string(scalar_system_info(a.system_).name) + " has no negation");
  if (a.exact()) return Scalar::closed(a.system_, -a.rational());
  return Scalar::closed(a.system_, -a.real());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_system(a, b);
  return a + (-b);
}

Scalar inverse(const Scalar& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroInverse, "zero has no inverse");
  if (a.exact()) return Scalar::closed(a.system_, Rational(1) / a.rational());
  return Scalar::closed(a.system_, 1.0 / a.real());
}

Scalar pow(const Scalar& a, std::int64_t k) {
  if (k < 0 && a.is_zero())
    fail(ErrorCode::ZeroInverse, "zero has no negative power");
  if (a.exact()) return Scalar::closed(a.system_, rational_pow(a.rational(), k));
  double b = a.real();
  std::uint64_t n;
  if (k < 0) {
    b = 1.0 / b;
    n = std::uint64_t(0) - static_cast<std::uint64_t>(k);
  } else {
    n = static_cast<std::uint64_t>(k);
  }
  double acc = 1.0;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return Scalar::closed(a.system_, acc);
}

}  // namespace qspace
