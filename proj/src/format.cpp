#include "qspace/format.hpp"

#include "qspace/unit_system.hpp"

namespace qspace {

std::string format_units(const Dimension& dim) {
  if (dim.is_identity()) return "[1]";
  const auto& base = dim.system()->base_units();
  std::string out;
  for (std::size_t i = 0; i < dim.rank(); ++i) {
    std::int64_t k = dim.exponents()[i];
    if (k == 0) continue;
    if (!out.empty()) out += "\xc2\xb7";
    out += base[i];
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string format_quantity(const Quantity& q, const FormatOptions& options) {
  if (options.substitute_derived && !q.dim().is_identity()) {
    for (const auto& [symbol, value] : q.system()->derived_units()) {
      if (value.dim().exponents() != q.dim().exponents()) continue;
      Scalar rescaled = q.measure() * inverse(value.measure());
      return rescaled.str() + " " + symbol;
    }
  }
  return q.measure().str() + " " + format_units(q.dim());
}

}  // namespace qspace
