#include "qspace/analysis.hpp"

#include <limits>

#include "qspace/int_linalg.hpp"
#include "qspace/unit_system.hpp"

namespace qspace {

HomogeneityReport check_homogeneous(const std::vector<Quantity>& terms) {
  if (terms.empty()) fail(ErrorCode::EmptyList, "no terms to check");
  HomogeneityReport report;
  report.homogeneous = true;
  report.term_dims.reserve(terms.size());
  for (const auto& term : terms) report.term_dims.push_back(term.dim());
  for (std::size_t i = 0; i + 1 < terms.size() && report.homogeneous; ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!commensurable(terms[i], terms[j])) {
        report.homogeneous = false;
        report.first_mismatch = {i, j};
        break;
      }
    }
  }
  return report;
}

Scalar convert(const Quantity& x, const Quantity& target) {
  if (!target.is_invertible())
    fail(ErrorCode::NonInvertible, "conversion target has measure 0");
  if (!commensurable(x, target))
    fail(ErrorCode::Incommensurable,
         "cannot convert between dimensions " + x.dim().str() + " and " +
             target.dim().str());
  return x.measure() * inverse(target.measure());
}

std::vector<std::vector<std::int64_t>> dimensionless_products(
    const std::vector<Dimension>& dims) {
  if (dims.empty()) fail(ErrorCode::EmptyList, "no dimensions given");
  for (std::size_t j = 1; j < dims.size(); ++j)
    if (!same_basis(dims[0].system(), dims[j].system()))
      fail(ErrorCode::SystemMismatch, "dimensions live over different unit systems");

  const std::size_t n = dims[0].rank();
  const std::size_t m = dims.size();
  IntMatrix matrix(n, std::vector<Integer>(m));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) matrix[i][j] = dims[j].exponents()[i];

  std::vector<std::vector<std::int64_t>> out;
  for (const auto& generator : integer_kernel(matrix)) {
    std::vector<std::int64_t> e(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (generator[j] < std::numeric_limits<std::int64_t>::min() ||
          generator[j] > std::numeric_limits<std::int64_t>::max())
        fail(ErrorCode::ExponentOverflow, "kernel generator exceeds 64-bit range");
      e[j] = generator[j].convert_to<std::int64_t>();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace qspace
