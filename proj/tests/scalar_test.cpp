#include <doctest.h>

#include "qspace/scalar.hpp"
#include "test_util.hpp"

using namespace qspace;
using qtest::Rng;

namespace {

Scalar q(std::int64_t num, std::int64_t den, ScalarSystem sys) {
  return Scalar::from_rational(Rational(num, den), sys);
}

}  // namespace

TEST_CASE("scalar system descriptors") {
  CHECK(scalar_system_info(ScalarSystem::FieldRational).has_negation);
  CHECK(scalar_system_info(ScalarSystem::FieldRational).has_zero);
  CHECK(scalar_system_info(ScalarSystem::NonNegativeRational).has_zero);
  CHECK_FALSE(scalar_system_info(ScalarSystem::NonNegativeRational).has_negation);
  CHECK_FALSE(scalar_system_info(ScalarSystem::PositiveRational).has_zero);
  CHECK_FALSE(scalar_system_info(ScalarSystem::PositiveReal).has_zero);

  CHECK(scalar_system_from_name("Field-Rational") == ScalarSystem::FieldRational);
  CHECK(scalar_system_from_name("Positive-Real") == ScalarSystem::PositiveReal);
  CHECK_FALSE(scalar_system_from_name("Imaginary").has_value());

  for (auto sys : {ScalarSystem::FieldRational, ScalarSystem::FieldReal,
                   ScalarSystem::NonNegativeRational, ScalarSystem::NonNegativeReal,
                   ScalarSystem::PositiveRational, ScalarSystem::PositiveReal}) {
    auto name = scalar_system_info(sys).name;
    CHECK(scalar_system_from_name(name) == sys);
    CHECK(exact_twin(floating_twin(sys)) == exact_twin(sys));
    CHECK(scalar_system_info(exact_twin(sys)).exact);
    CHECK_FALSE(scalar_system_info(floating_twin(sys)).exact);
  }
}

TEST_CASE("membership is enforced at construction") {
  CHECK_THROWS_AS(Scalar::from_int(-3, ScalarSystem::PositiveRational), Error);
  CHECK_THROWS_AS(Scalar::from_int(0, ScalarSystem::PositiveRational), Error);
  CHECK_THROWS_AS(Scalar::from_int(-1, ScalarSystem::NonNegativeReal), Error);
  CHECK_NOTHROW(Scalar::from_int(0, ScalarSystem::NonNegativeRational));
  CHECK_NOTHROW(Scalar::from_int(-7, ScalarSystem::FieldRational));
  CHECK_THROWS_AS(Scalar::from_real(std::nan(""), ScalarSystem::FieldReal), Error);

  try {
    Scalar::from_int(-3, ScalarSystem::PositiveRational);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Domain);
  }
}

TEST_CASE("addition stays inside Positive-Rational") {
  // 1/3 + 1/6 = 1/2: cross multiplication gives (1*6 + 1*3) / 18 = 9/18.
  Rational oracle(1 * 6 + 1 * 3, 3 * 6);
  CHECK(oracle == Rational(1, 2));
  Scalar sum = q(1, 3, ScalarSystem::PositiveRational) + q(1, 6, ScalarSystem::PositiveRational);
  CHECK(sum.rational() == oracle);
  CHECK(sum.str() == "1/2");
}

TEST_CASE("multiplication, inverse, pow") {
  auto sys = ScalarSystem::FieldRational;
  CHECK((q(2, 3, sys) * q(3, 4, sys)).rational() == Rational(1, 2));
  CHECK(inverse(q(2, 3, sys)).rational() == Rational(3, 2));
  CHECK_THROWS_AS(inverse(Scalar::zero(sys)), Error);
  try {
    inverse(Scalar::zero(sys));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroInverse);
  }

  CHECK(pow(q(2, 3, sys), -2).rational() == Rational(9, 4));
  CHECK(pow(q(2, 3, sys), 0).rational() == 1);
  CHECK(pow(Scalar::zero(sys), 3).is_zero());
  CHECK_THROWS_AS(pow(Scalar::zero(sys), -1), Error);

  // pow agrees with repeated multiplication.
  Rng rng(821);
  for (int i = 0; i < 200; ++i) {
    Scalar base = qtest::random_scalar(rng, sys, true);
    std::int64_t k = rng.range(-6, 6);
    Scalar by_mul = Scalar::one(sys);
    Scalar b = k < 0 ? inverse(base) : base;
    for (std::int64_t step = 0; step < (k < 0 ? -k : k); ++step) by_mul = by_mul * b;
    CHECK(pow(base, k) == by_mul);
  }
}

TEST_CASE("negation is capability gated") {
  CHECK((-q(3, 1, ScalarSystem::FieldRational)).rational() == -3);
  CHECK_THROWS_AS(-q(3, 1, ScalarSystem::PositiveRational), Error);
  CHECK_THROWS_AS(-q(3, 1, ScalarSystem::NonNegativeRational), Error);
  try {
    -q(3, 1, ScalarSystem::PositiveRational);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedNegation);
  }
  CHECK_THROWS_AS(Scalar::zero(ScalarSystem::PositiveRational), Error);
  try {
    Scalar::zero(ScalarSystem::PositiveReal);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedZero);
  }
}

TEST_CASE("mixing scalar systems is rejected") {
  CHECK_THROWS_AS(q(1, 2, ScalarSystem::FieldRational) + q(1, 2, ScalarSystem::PositiveRational),
                  Error);
  try {
    q(1, 2, ScalarSystem::FieldRational) * q(1, 2, ScalarSystem::FieldReal);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SystemMismatch);
  }
  CHECK(q(1, 2, ScalarSystem::FieldRational) != q(1, 2, ScalarSystem::PositiveRational));
}

TEST_CASE("text round trips") {
  auto sys = ScalarSystem::FieldRational;
  CHECK(Scalar::parse("5/10", sys).rational() == Rational(1, 2));
  CHECK(Scalar::parse("0.25", sys).rational() == Rational(1, 4));
  CHECK(Scalar::parse("2.5e-3", sys).rational() == Rational(1, 400));
  CHECK(Scalar::parse("-7", sys).rational() == -7);
  CHECK_THROWS_AS(Scalar::parse("zebra", sys), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0", sys), Error);

  auto fsys = ScalarSystem::FieldReal;
  CHECK(Scalar::parse("0.1", fsys).real() == 0.1);
  CHECK(Scalar::parse("1e3", fsys).real() == 1000.0);
  CHECK(Scalar::parse("1/2", fsys).real() == 0.5);

  Rng rng(92);
  for (int i = 0; i < 300; ++i) {
    Scalar s = qtest::random_scalar(rng, sys);
    CHECK(Scalar::parse(s.str(), sys) == s);
    Scalar f = qtest::random_scalar(rng, fsys);
    CHECK(Scalar::parse(f.str(), fsys) == f);
  }
}

TEST_CASE("exact/floating conversions") {
  // Literals entering the binary64 backend match strtod semantics.
  CHECK(rational_to_double(Rational(1, 10)) == 0.1);
  CHECK(rational_to_double(Rational(1, 3)) == 1.0 / 3.0);
  CHECK(rational_to_double(Rational(-22, 7)) == -22.0 / 7.0);
  // Doubles enter the exact backend exactly.
  Scalar back = Scalar::from_real(0.1, ScalarSystem::FieldRational);
  CHECK(rational_to_double(back.rational()) == 0.1);
  CHECK(back.rational() != Rational(1, 10));  // 0.1 is not 1/10 in binary
}

TEST_CASE("field laws, exact backend") {
  auto sys = ScalarSystem::FieldRational;
  Rng rng(7001);
  for (int i = 0; i < 500; ++i) {
    Scalar a = qtest::random_scalar(rng, sys);
    Scalar b = qtest::random_scalar(rng, sys);
    Scalar c = qtest::random_scalar(rng, sys);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Scalar::zero(sys) == a);
    CHECK(a * Scalar::one(sys) == a);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK((a * inverse(a)).is_one());
  }
}

TEST_CASE("semifield laws, floating backend at 1e-12") {
  auto sys = ScalarSystem::PositiveReal;
  Rng rng(7002);
  for (int i = 0; i < 500; ++i) {
    Scalar a = qtest::random_scalar(rng, sys);
    Scalar b = qtest::random_scalar(rng, sys);
    Scalar c = qtest::random_scalar(rng, sys);
    CHECK(qtest::scalar_close((a + b) + c, a + (b + c)));
    CHECK(qtest::scalar_close((a * b) * c, a * (b * c)));
    CHECK(qtest::scalar_close(a * (b + c), a * b + a * c));
    CHECK(qtest::scalar_close(a * inverse(a), Scalar::one(sys)));
  }
}
