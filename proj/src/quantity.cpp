#include "qspace/quantity.hpp"

#include "qspace/unit_system.hpp"

namespace qspace {

Quantity::Quantity(Scalar measure, Dimension dim)
    : measure_(std::move(measure)), dim_(std::move(dim)) {
  if (measure_.system() != dim_.system()->scalar_system())
    fail(ErrorCode::SystemMismatch,
         "measure scalar system does not match the unit system's");
}

Quantity Quantity::one(const SystemPtr& system) {
  return Quantity(Scalar::one(system->scalar_system()), Dimension::identity(system));
}

bool operator==(const Quantity& a, const Quantity& b) {
  return a.dim_ == b.dim_ && a.measure_ == b.measure_;
}

Quantity operator*(const Quantity& x, const Quantity& y) {
  return Quantity(x.measure() * y.measure(), x.dim() * y.dim());
}

Quantity operator*(const Scalar& alpha, const Quantity& x) {
  if (alpha.system() != x.system()->scalar_system())
    fail(ErrorCode::SystemMismatch, "scalar is from a different scalar system");
  return Quantity(alpha * x.measure(), x.dim());
}

Quantity pow(const Quantity& x, std::int64_t k) {
  if (k < 0 && !x.is_invertible())
    fail(ErrorCode::NonInvertible, "negative power of a non-invertible quantity");
  return Quantity(pow(x.measure(), k), pow(x.dim(), k));
}

Quantity inverse(const Quantity& x) {
  if (!x.is_invertible())
    fail(ErrorCode::NonInvertible, "quantity with measure 0 has no inverse");
  return Quantity(inverse(x.measure()), inverse(x.dim()));
}

bool commensurable(const Quantity& x, const Quantity& y) {
  if (!same_basis(x.system(), y.system()))
    fail(ErrorCode::SystemMismatch, "quantities live over different unit systems");
  return x.dim().exponents() == y.dim().exponents();
}

Quantity operator+(const Quantity& x, const Quantity& y) {
  if (!commensurable(x, y))
    fail(ErrorCode::Incommensurable,
         "cannot add incommensurable quantities: " + x.dim().str() + " vs " +
             y.dim().str());
  return Quantity(x.measure() + y.measure(), x.dim());
}

Quantity operator-(const Quantity& x) {
  // Capability check lives in scalar negation.
  return Quantity(-x.measure(), x.dim());
}

Quantity operator-(const Quantity& x, const Quantity& y) {
  if (!commensurable(x, y))
    fail(ErrorCode::Incommensurable,
         "cannot subtract incommensurable quantities: " + x.dim().str() + " vs " +
             y.dim().str());
  return x + (-y);
}

Quantity zero_of(const Dimension& dim) {
  return Quantity(Scalar::zero(dim.system()->scalar_system()), dim);
}

Quantity canonical_pivot(const Dimension& dim) {
  return Quantity(Scalar::one(dim.system()->scalar_system()), dim);
}

}  // namespace qspace
