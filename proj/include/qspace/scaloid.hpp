#pragma once

#include <concepts>

#include "qspace/quantity.hpp"
#include "qspace/scalar.hpp"
#include "qspace/unit_system.hpp"

namespace qspace {

// Operations bundle for a monoid with a scalar action. Anything satisfying
// this contract can be run through the generic law suite; the two instances
// below are the quantity space itself and a scalar system acting on its own
// multiplicative monoid.
template <typename Ops>
concept ScaloidContract =
    requires(const Ops& ops, const typename Ops::Element& x,
             const typename Ops::Element& y, const Scalar& alpha) {
      typename Ops::Element;
      { ops.one() } -> std::same_as<typename Ops::Element>;
      { ops.mul(x, y) } -> std::same_as<typename Ops::Element>;
      { ops.scale(alpha, x) } -> std::same_as<typename Ops::Element>;
      { x == y } -> std::convertible_to<bool>;
    };

struct QuantitySpaceOps {
  using Element = Quantity;
  SystemPtr system;

  Quantity one() const { return Quantity::one(system); }
  Quantity mul(const Quantity& x, const Quantity& y) const { return x * y; }
  Quantity scale(const Scalar& alpha, const Quantity& x) const { return alpha * x; }
};

struct ScalarMonoidOps {
  using Element = Scalar;
  ScalarSystem system;

  Scalar one() const { return Scalar::one(system); }
  Scalar mul(const Scalar& x, const Scalar& y) const { return x * y; }
  Scalar scale(const Scalar& alpha, const Scalar& x) const { return alpha * x; }
};

static_assert(ScaloidContract<QuantitySpaceOps>);
static_assert(ScaloidContract<ScalarMonoidOps>);

}  // namespace qspace
