#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qspace/dimension.hpp"
#include "qspace/quantity.hpp"
#include "qspace/scalar.hpp"

namespace qspace {

struct HomogeneityReport {
  bool homogeneous = false;
  std::vector<Dimension> term_dims;
  // Indices of the first offending pair when not homogeneous.
  std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;
};

// May the given terms be summed? All pairwise commensurable.
HomogeneityReport check_homogeneous(const std::vector<Quantity>& terms);

// The factor kappa with x = kappa * target; target must be invertible and
// commensurable with x.
Scalar convert(const Quantity& x, const Quantity& target);

// Exponent vectors e (one per generator) with prod_j dims[j]^e[j]
// dimensionless: the integer kernel of the exponent matrix.
std::vector<std::vector<std::int64_t>> dimensionless_products(
    const std::vector<Dimension>& dims);

}  // namespace qspace
