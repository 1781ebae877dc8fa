#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qspace/error.hpp"

namespace qspace {

class UnitSystem;
using SystemPtr = std::shared_ptr<const UnitSystem>;

// Element of the free abelian group of base-unit exponents of one system.
// Two quantities share a dimension exactly when these vectors are equal.
class Dimension {
public:
  Dimension(SystemPtr system, std::vector<std::int64_t> exponents);
  static Dimension identity(SystemPtr system);

  const SystemPtr& system() const noexcept { return system_; }
  std::size_t rank() const noexcept { return exponents_.size(); }
  const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
  std::int64_t exponent(std::size_t i) const { return exponents_.at(i); }
  bool is_identity() const noexcept;
  std::string str() const;  // "(1, 0, -2)"

  friend bool operator==(const Dimension& a, const Dimension& b);
  friend bool operator!=(const Dimension& a, const Dimension& b) { return !(a == b); }

private:
  SystemPtr system_;
  std::vector<std::int64_t> exponents_;
};

Dimension operator*(const Dimension& a, const Dimension& b);
Dimension inverse(const Dimension& a);
Dimension pow(const Dimension& a, std::int64_t k);

}  // namespace qspace
