#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qspace/error.hpp"
#include "qspace/rational.hpp"

namespace qspace {

// The scalar domains quantities are measured in. Rational-backed systems
// compute exactly; Real-backed systems use binary64.
enum class ScalarSystem {
  FieldRational,
  FieldReal,
  NonNegativeRational,
  NonNegativeReal,
  PositiveRational,
  PositiveReal,
};

struct ScalarSystemInfo {
  std::string_view name;  // serialized id, e.g. "Field-Rational"
  bool has_zero;
  bool has_negation;  // implies has_zero
  bool exact;
};

const ScalarSystemInfo& scalar_system_info(ScalarSystem system);
std::optional<ScalarSystem> scalar_system_from_name(std::string_view name);
ScalarSystem exact_twin(ScalarSystem system);
ScalarSystem floating_twin(ScalarSystem system);

// Immutable member of one scalar system. Membership is enforced when a value
// enters from outside; closed operations cannot leave the domain.
class Scalar {
public:
  static Scalar from_rational(Rational value, ScalarSystem system);
  static Scalar from_real(double value, ScalarSystem system);
  static Scalar from_int(std::int64_t value, ScalarSystem system);
  // Backend-appropriate text: exact systems parse to a rational, floating
  // systems to a binary64 ("p/q" is one division).
  static Scalar parse(std::string_view text, ScalarSystem system);
  static Scalar one(ScalarSystem system);
  static Scalar zero(ScalarSystem system);  // UnsupportedZero if 0 is absent

  ScalarSystem system() const noexcept { return system_; }
  bool exact() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  const Rational& rational() const;  // exact backend only
  double real() const;               // floating backend only
  double to_double() const;
  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar inverse(const Scalar& a);
  friend Scalar pow(const Scalar& a, std::int64_t k);

private:
  Scalar(ScalarSystem system, std::variant<Rational, double> value)
      : system_(system), value_(std::move(value)) {}

  static Scalar checked(ScalarSystem system, std::variant<Rational, double> value);
  static Scalar closed(ScalarSystem system, std::variant<Rational, double> value);

  ScalarSystem system_;
  std::variant<Rational, double> value_;
};

}  // namespace qspace
