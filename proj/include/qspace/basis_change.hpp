#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qspace/quantity.hpp"
#include "qspace/scalar.hpp"
#include "qspace/unit_system.hpp"

namespace qspace {

// Validated change of basis. Row j expands target base unit j in the source
// basis: b'_j = scales[j] * prod_i b_i^(matrix[j][i]); |det matrix| = 1.
struct BasisChange {
  SystemPtr source;
  SystemPtr target;
  std::vector<std::vector<std::int64_t>> matrix;
  std::vector<Scalar> scales;
};

// Checks rank, invertibility of every proposed unit, and unimodularity of the
// exponent matrix; rejections carry the offending determinant.
BasisChange propose_basis_change(
    const SystemPtr& source,
    const std::vector<std::pair<std::string, Quantity>>& new_units,
    std::string target_id);

// Rewrites x in the target basis. The exponent system matrix^T * l = k is
// solved exactly; the measure picks up the inverse of the scale factors.
Quantity rebase(const Quantity& x, const BasisChange& change);

// The reverse change; integral because the matrix is unimodular.
BasisChange inverse(const BasisChange& change);

}  // namespace qspace
