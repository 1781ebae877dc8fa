#pragma once

// Generic law suite for anything satisfying ScaloidContract. The report
// callback receives (ok, law name) per check so both the doctest suites and
// the acceptance harness can consume it.

#include <utility>

#include "qspace/scalar.hpp"
#include "qspace/scaloid.hpp"

namespace qtest {

// eq: equality predicate (exact == for rational backends, tolerance for
// binary64). elem/scal: nullary generators. report(bool, const char*).
template <typename Ops, typename Eq, typename ElemGen, typename ScalGen, typename Report>
void run_scaloid_laws(const Ops& ops, Eq&& eq, ElemGen&& elem, ScalGen&& scal,
                      int iterations, Report&& report)
  requires qspace::ScaloidContract<Ops>
{
  using qspace::Scalar;
  for (int i = 0; i < iterations; ++i) {
    auto x = elem();
    auto y = elem();
    auto z = elem();
    Scalar a = scal();
    Scalar b = scal();
    Scalar unit = Scalar::one(a.system());

    report(eq(ops.mul(ops.mul(x, y), z), ops.mul(x, ops.mul(y, z))),
           "mul is associative");
    report(eq(ops.mul(x, y), ops.mul(y, x)), "mul is commutative");
    report(eq(ops.mul(x, ops.one()), x), "one is a right identity");
    report(eq(ops.mul(ops.one(), x), x), "one is a left identity");
    report(eq(ops.scale(unit, x), x), "1x = x");
    report(eq(ops.scale(a, ops.scale(b, x)), ops.scale(a * b, x)),
           "a(bx) = (ab)x");
    report(eq(ops.scale(a, ops.mul(x, y)), ops.mul(ops.scale(a, x), y)),
           "a(xy) = (ax)y");
    report(eq(ops.scale(a, ops.mul(x, y)), ops.mul(x, ops.scale(a, y))),
           "a(xy) = x(ay)");
    report(eq(ops.mul(ops.scale(a, x), ops.scale(b, y)),
              ops.scale(a * b, ops.mul(x, y))),
           "(ax)(by) = (ab)(xy)");
    report(eq(ops.scale(a, ops.scale(b, x)), ops.scale(b, ops.scale(a, x))),
           "a(bx) = b(ax)");
  }
}

}  // namespace qtest
