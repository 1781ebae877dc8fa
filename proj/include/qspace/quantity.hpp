#pragma once

#include <cstdint>
#include <string>

#include "qspace/dimension.hpp"
#include "qspace/scalar.hpp"

namespace qspace {

// Canonical form of a quantity: a measure together with the exponent vector
// of its unique basis expansion. Equality is componentwise.
class Quantity {
public:
  Quantity(Scalar measure, Dimension dim);
  static Quantity one(const SystemPtr& system);

  const Scalar& measure() const noexcept { return measure_; }
  const Dimension& dim() const noexcept { return dim_; }
  const SystemPtr& system() const noexcept { return dim_.system(); }
  bool is_invertible() const noexcept { return !measure_.is_zero(); }

  friend bool operator==(const Quantity& a, const Quantity& b);
  friend bool operator!=(const Quantity& a, const Quantity& b) { return !(a == b); }

private:
  Scalar measure_;
  Dimension dim_;
};

Quantity operator*(const Quantity& x, const Quantity& y);
Quantity operator*(const Scalar& alpha, const Quantity& x);
Quantity pow(const Quantity& x, std::int64_t k);
Quantity inverse(const Quantity& x);

// x ~ y: some nonzero rescalings of x and y coincide; in canonical form,
// equality of exponent vectors.
bool commensurable(const Quantity& x, const Quantity& y);

Quantity operator+(const Quantity& x, const Quantity& y);
Quantity operator-(const Quantity& x, const Quantity& y);
Quantity operator-(const Quantity& x);

// Additive identity of one realm; requires the scalar system to contain 0.
Quantity zero_of(const Dimension& dim);

// The invertible representative with measure 1.
Quantity canonical_pivot(const Dimension& dim);

}  // namespace qspace
