#pragma once

#include <cstdint>
#include <vector>

#include "qspace/rational.hpp"

namespace qspace {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& rows);

// Fraction-free (Bareiss) determinant; every intermediate stays integral.
Integer int_det(const IntMatrix& m);

// Solve a*x = rhs for an integer x. Requires |det a| = 1; callers validate
// unimodularity first, so a violation here is an internal error.
std::vector<Integer> solve_unimodular(const IntMatrix& a,
                                      const std::vector<Integer>& rhs);

// Generators of {e : m*e = 0} over the integers: exact rational elimination,
// denominators cleared, each generator primitive (gcd 1) with its first
// nonzero entry positive, ordered by ascending free column.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

}  // namespace qspace
