#include <doctest.h>

#include "law_suite.hpp"
#include "qspace/quantity.hpp"
#include "qspace/scaloid.hpp"
#include "qspace/unit_system.hpp"
#include "test_util.hpp"

using namespace qspace;
using qtest::Rng;

namespace {

SystemPtr meter_second(ScalarSystem sys = ScalarSystem::FieldRational) {
  return UnitSystem::create("ms", sys, {"m", "s"});
}

Quantity mk(const SystemPtr& sys, std::int64_t num, std::int64_t den,
            std::vector<std::int64_t> exps) {
  return sys->make_quantity(Scalar::from_rational(Rational(num, den), sys->scalar_system()),
                            std::move(exps));
}

}  // namespace

TEST_CASE("product adds exponents and multiplies measures") {
  auto sys = meter_second();
  // (3 m s^-1) * (2 s): exponents (1,-1) + (0,1) = (1,0), measures 3*2 = 6.
  Quantity speed = mk(sys, 3, 1, {1, -1});
  Quantity time = mk(sys, 2, 1, {0, 1});
  Quantity expected = mk(sys, 6, 1, {1, 0});
  CHECK(speed * time == expected);

  Rng rng(31);
  for (int i = 0; i < 400; ++i) {
    Quantity x = qtest::random_quantity(rng, sys);
    Quantity y = qtest::random_quantity(rng, sys);
    Quantity p = x * y;
    CHECK(p.measure().rational() == x.measure().rational() * y.measure().rational());
    for (std::size_t k = 0; k < sys->rank(); ++k)
      CHECK(p.dim().exponents()[k] == x.dim().exponents()[k] + y.dim().exponents()[k]);
  }
}

TEST_CASE("pow matches repeated multiplication") {
  auto sys = meter_second();
  Quantity two_m = mk(sys, 2, 1, {1, 0});
  CHECK(pow(two_m, 3) == mk(sys, 8, 1, {3, 0}));
  CHECK(pow(two_m, 3) == qtest::pow_by_repeated_mul(two_m, 3));
  CHECK(pow(two_m, 0) == Quantity::one(sys));

  Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    Quantity x = qtest::random_quantity(rng, sys, true);
    std::int64_t k = rng.range(-6, 6);
    CHECK(pow(x, k) == qtest::pow_by_repeated_mul(x, k));
  }
}

TEST_CASE("inverse undoes multiplication") {
  auto sys = meter_second();
  Quantity two_m = mk(sys, 2, 1, {1, 0});
  Quantity inv = inverse(two_m);
  CHECK(inv == mk(sys, 1, 2, {-1, 0}));
  CHECK(two_m * inv == Quantity::one(sys));

  Quantity zero_m = mk(sys, 0, 1, {1, 0});
  CHECK_FALSE(zero_m.is_invertible());
  CHECK_THROWS_AS(inverse(zero_m), Error);
  CHECK_THROWS_AS(pow(zero_m, -2), Error);
  try {
    inverse(zero_m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonInvertible);
  }

  Rng rng(33);
  for (int i = 0; i < 300; ++i) {
    Quantity x = qtest::random_quantity(rng, sys, true);
    CHECK(x.is_invertible());
    CHECK(x * inverse(x) == Quantity::one(sys));
    CHECK(inverse(x).measure().rational() == 1 / x.measure().rational());
  }
}

TEST_CASE("addition needs commensurability") {
  auto sys = meter_second();
  Quantity a = mk(sys, 2, 1, {1, 0});
  Quantity b = mk(sys, 3, 1, {1, 0});
  CHECK(a + b == mk(sys, 5, 1, {1, 0}));

  Quantity c = mk(sys, 3, 1, {0, 1});
  CHECK_FALSE(commensurable(a, c));
  CHECK_THROWS_AS(a + c, Error);
  try {
    a + c;
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Incommensurable);
  }

  auto other = UnitSystem::create("other", ScalarSystem::FieldRational, {"x", "y"});
  CHECK_THROWS_AS(commensurable(a, Quantity::one(other)), Error);
  try {
    a + Quantity::one(other);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SystemMismatch);
  }
}

TEST_CASE("commensurability is an equivalence and a congruence") {
  auto sys = meter_second();
  Rng rng(34);
  auto pool = [&](Rng& r) {
    // Small dimension pool so random pairs collide often.
    static const std::vector<std::vector<std::int64_t>> dims = {
        {1, 0}, {0, 1}, {1, -1}, {1, 0}, {0, 0}};
    return mk(sys, r.range(-9, 9), r.range(1, 9),
              std::vector<std::int64_t>(dims[static_cast<std::size_t>(r.range(0, 4))]));
  };
  for (int i = 0; i < 500; ++i) {
    Quantity x = pool(rng);
    Quantity y = pool(rng);
    Quantity z = pool(rng);
    CHECK(commensurable(x, x));
    CHECK(commensurable(x, y) == commensurable(y, x));
    if (commensurable(x, y) && commensurable(y, z)) CHECK(commensurable(x, z));

    Quantity x2 = pool(rng);
    Quantity y2 = pool(rng);
    if (commensurable(x, x2) && commensurable(y, y2))
      CHECK(commensurable(x * y, x2 * y2));
  }
}

TEST_CASE("three equivalent commensurability conditions") {
  auto sys = meter_second();
  Rng rng(35);
  for (int i = 0; i < 1000; ++i) {
    // Force frequent collisions.
    Quantity x = qtest::random_quantity(rng, sys, true);
    Quantity y = rng.percent(50)
                     ? Quantity(qtest::random_scalar(rng, sys->scalar_system(), true), x.dim())
                     : qtest::random_quantity(rng, sys, true);
    bool related = commensurable(x, y);
    bool same_exponents = x.dim().exponents() == y.dim().exponents();
    // nu x = mu y with nu = measure(y), mu = measure(x).
    bool can_rescale = y.measure() * x == x.measure() * y;
    CHECK(related == same_exponents);
    CHECK(related == can_rescale);
  }
}

TEST_CASE("canonical form is unique") {
  auto sys = meter_second();
  Rng rng(36);
  for (int i = 0; i < 300; ++i) {
    Quantity x = qtest::random_quantity(rng, sys);
    // x = mu * pivot(dim x), and the pair (mu, exponents) is forced.
    Quantity pivot = canonical_pivot(x.dim());
    CHECK(pivot.measure().is_one());
    CHECK(x.measure() * pivot == x);
    Quantity y = qtest::random_quantity(rng, sys);
    if (x == y) {
      CHECK(x.measure() == y.measure());
      CHECK(x.dim() == y.dim());
    }
  }
}

TEST_CASE("zero and negation behave in a field") {
  auto sys = meter_second();
  Quantity a = mk(sys, 2, 1, {1, 0});
  Quantity zero = zero_of(a.dim());
  CHECK(zero + a == a);
  CHECK(Scalar::zero(sys->scalar_system()) * a == zero);
  CHECK(a - mk(sys, 3, 1, {1, 0}) == mk(sys, -1, 1, {1, 0}));
  CHECK(a + (-a) == zero);
  CHECK(-a == Scalar::from_int(-1, sys->scalar_system()) * a);
}

TEST_CASE("zero and negation are capability gated") {
  auto pos = meter_second(ScalarSystem::PositiveRational);
  Quantity a = mk(pos, 2, 1, {1, 0});
  Quantity b = mk(pos, 3, 1, {1, 0});
  CHECK(a + b == mk(pos, 5, 1, {1, 0}));  // addition is closed, no zero needed
  CHECK_THROWS_AS(-a, Error);
  CHECK_THROWS_AS(b - a, Error);
  CHECK_THROWS_AS(zero_of(a.dim()), Error);
  try {
    zero_of(a.dim());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedZero);
  }
  try {
    b - a;
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedNegation);
  }

  auto nn = meter_second(ScalarSystem::NonNegativeRational);
  CHECK(zero_of(Dimension::identity(nn)).measure().is_zero());
  CHECK_THROWS_AS(-Quantity::one(nn), Error);
}

TEST_CASE("measure is a homomorphism") {
  auto sys = meter_second();
  Rng rng(37);
  for (int i = 0; i < 500; ++i) {
    Quantity x = qtest::random_quantity(rng, sys);
    Quantity y = qtest::random_quantity(rng, sys);
    Scalar alpha = qtest::random_scalar(rng, sys->scalar_system());
    CHECK((x * y).measure() == x.measure() * y.measure());
    CHECK((alpha * x).measure() == alpha * x.measure());
    Quantity same_dim(qtest::random_scalar(rng, sys->scalar_system()), x.dim());
    CHECK((x + same_dim).measure() == x.measure() + same_dim.measure());
  }
}

TEST_CASE("exponent arithmetic is overflow checked") {
  auto sys = meter_second();
  Quantity big = sys->make_quantity(Scalar::one(sys->scalar_system()),
                                    {std::int64_t{1} << 62, 0});
  CHECK_THROWS_AS(pow(big, 4), Error);
  CHECK_THROWS_AS(big * big * big, Error);
  try {
    pow(big, 4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExponentOverflow);
  }
}

TEST_CASE("quantity construction checks the scalar system") {
  auto sys = meter_second();
  CHECK_THROWS_AS(Quantity(Scalar::one(ScalarSystem::PositiveRational),
                           Dimension::identity(sys)),
                  Error);
  CHECK_THROWS_AS(sys->make_dim({1, 2, 3}), Error);
  try {
    sys->make_dim({1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankMismatch);
  }
}

TEST_CASE("scaloid law suite over representative instances") {
  auto report = [](bool ok, const char* law) {
    if (!ok) FAIL_CHECK(law);
    else CHECK(ok);
  };
  auto exact_eq = [](const auto& a, const auto& b) { return a == b; };

  SUBCASE("quantity space, Field-Rational") {
    Rng rng(41);
    QuantitySpaceOps ops{meter_second()};
    qtest::run_scaloid_laws(
        ops, exact_eq, [&] { return qtest::random_quantity(rng, ops.system); },
        [&] { return qtest::random_scalar(rng, ops.system->scalar_system()); }, 300,
        report);
  }
  SUBCASE("quantity space, Positive-Rational") {
    Rng rng(42);
    QuantitySpaceOps ops{meter_second(ScalarSystem::PositiveRational)};
    qtest::run_scaloid_laws(
        ops, exact_eq, [&] { return qtest::random_quantity(rng, ops.system); },
        [&] { return qtest::random_scalar(rng, ops.system->scalar_system()); }, 300,
        report);
  }
  SUBCASE("scalar multiplicative monoid on itself") {
    Rng rng(43);
    ScalarMonoidOps ops{ScalarSystem::FieldRational};
    qtest::run_scaloid_laws(
        ops, exact_eq, [&] { return qtest::random_scalar(rng, ops.system); },
        [&] { return qtest::random_scalar(rng, ops.system); }, 300, report);
  }
  SUBCASE("quantity space, Field-Real at 1e-12") {
    Rng rng(44);
    QuantitySpaceOps ops{meter_second(ScalarSystem::FieldReal)};
    auto close = [](const auto& a, const auto& b) { return qtest::quantity_close(a, b); };
    qtest::run_scaloid_laws(
        ops, close, [&] { return qtest::random_quantity(rng, ops.system); },
        [&] { return qtest::random_scalar(rng, ops.system->scalar_system()); }, 300,
        report);
  }
}

TEST_CASE("dimension group laws") {
  auto sys = meter_second();
  Rng rng(45);
  for (int i = 0; i < 400; ++i) {
    Dimension d1 = qtest::random_dimension(rng, sys);
    Dimension d2 = qtest::random_dimension(rng, sys);
    Dimension d3 = qtest::random_dimension(rng, sys);
    CHECK((d1 * d2) * d3 == d1 * (d2 * d3));
    CHECK(d1 * d2 == d2 * d1);
    CHECK(d1 * Dimension::identity(sys) == d1);
    CHECK(d1 * inverse(d1) == Dimension::identity(sys));
    CHECK(pow(d1, 3) == d1 * d1 * d1);
    CHECK(pow(d1, -1) == inverse(d1));
  }
}
