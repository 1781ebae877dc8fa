#include "qspace/basis_change.hpp"

#include <limits>

#include "qspace/int_linalg.hpp"

namespace qspace {

namespace {

std::int64_t to_int64(const Integer& value) {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max())
    fail(ErrorCode::ExponentOverflow, "exponent exceeds 64-bit range");
  return value.convert_to<std::int64_t>();
}

}  // namespace

BasisChange propose_basis_change(
    const SystemPtr& source,
    const std::vector<std::pair<std::string, Quantity>>& new_units,
    std::string target_id) {
  if (!source) throw InternalError("basis change without a source system");
  const std::size_t n = source->rank();
  if (new_units.empty()) fail(ErrorCode::EmptyBasis, "a basis needs at least one unit");
  if (new_units.size() != n)
    fail(ErrorCode::RankMismatch,
         "expected " + std::to_string(n) + " units for a rank-" + std::to_string(n) +
             " system, got " + std::to_string(new_units.size()));

  std::vector<std::string> symbols;
  std::vector<std::vector<std::int64_t>> matrix;
  std::vector<Scalar> scales;
  symbols.reserve(n);
  matrix.reserve(n);
  scales.reserve(n);
  for (const auto& [symbol, value] : new_units) {
    if (!same_basis(value.system(), source))
      fail(ErrorCode::SystemMismatch,
           "proposed unit '" + symbol + "' lives over a different basis");
    if (!value.is_invertible())
      fail(ErrorCode::NonInvertible,
           "proposed unit '" + symbol + "' has measure 0");
    symbols.push_back(symbol);
    matrix.push_back(value.dim().exponents());
    scales.push_back(value.measure());
  }

  Integer det = int_det(to_int_matrix(matrix));
  if (det != 1 && det != -1)
    fail(ErrorCode::NonUnimodular,
         "exponent matrix has determinant " + det.str() + ", need +1 or -1");

  SystemPtr target =
      UnitSystem::create(std::move(target_id), source->scalar_system(), symbols);
  return BasisChange{source, target, std::move(matrix), std::move(scales)};
}

Quantity rebase(const Quantity& x, const BasisChange& change) {
  if (!same_basis(x.system(), change.source))
    fail(ErrorCode::SystemMismatch, "quantity does not live over the source basis");
  const std::size_t n = change.source->rank();

  IntMatrix a(n, std::vector<Integer>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = change.matrix[j][i];
  std::vector<Integer> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = x.dim().exponents()[i];

  std::vector<Integer> solved = solve_unimodular(a, rhs);
  std::vector<std::int64_t> exps(n);
  Scalar factor = Scalar::one(change.source->scalar_system());
  for (std::size_t j = 0; j < n; ++j) {
    exps[j] = to_int64(solved[j]);
    factor = factor * pow(change.scales[j], exps[j]);
  }
  return change.target->make_quantity(x.measure() * inverse(factor), std::move(exps));
}

BasisChange inverse(const BasisChange& change) {
  const std::size_t n = change.source->rank();
  std::vector<std::vector<std::int64_t>> matrix;
  std::vector<Scalar> scales;
  matrix.reserve(n);
  scales.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Quantity moved = rebase(change.source->base_quantity(i), change);
    matrix.push_back(moved.dim().exponents());
    scales.push_back(moved.measure());
  }
  Integer det = int_det(to_int_matrix(matrix));
  if (det != 1 && det != -1)
    throw InternalError("inverse of a unimodular change is not unimodular");
  return BasisChange{change.target, change.source, std::move(matrix),
                     std::move(scales)};
}

}  // namespace qspace
