#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qspace/quantity.hpp"
#include "qspace/scalar.hpp"

namespace qspace {

// Symbols usable as unit or binding names: identifier-shaped, UTF-8 tails
// allowed, no digits up front, none of the operator/bracket characters.
bool is_valid_symbol(std::string_view text);

// An immutable snapshot: a scalar system, an ordered basis of unit symbols,
// and a table of derived units. Mutating calls return new snapshots; existing
// quantities stay usable because interop is keyed on same_basis, not on the
// snapshot pointer.
class UnitSystem : public std::enable_shared_from_this<UnitSystem> {
public:
  struct Key {
    explicit Key() = default;
  };

  UnitSystem(Key, std::string id, ScalarSystem scalar,
             std::vector<std::string> base_units);

  static SystemPtr create(std::string id, ScalarSystem scalar,
                          std::vector<std::string> base_units);

  const std::string& id() const noexcept { return id_; }
  ScalarSystem scalar_system() const noexcept { return scalar_; }
  std::size_t rank() const noexcept { return base_units_.size(); }
  const std::vector<std::string>& base_units() const noexcept { return base_units_; }
  std::optional<std::size_t> base_index(std::string_view symbol) const;

  // The basis quantity b_i (measure 1, one-hot exponents).
  Quantity base_quantity(std::size_t index) const;

  // New snapshot with one more derived unit; value must be invertible and
  // live over the same basis.
  SystemPtr with_derived(std::string symbol, const Quantity& value) const;

  const std::vector<std::pair<std::string, Quantity>>& derived_units() const noexcept {
    return derived_;
  }

  // Base or derived unit by symbol, as a quantity over this snapshot's basis.
  std::optional<Quantity> unit(std::string_view symbol) const;
  bool has_symbol(std::string_view symbol) const;

  Dimension make_dim(std::vector<std::int64_t> exponents) const;
  Quantity make_quantity(Scalar measure, std::vector<std::int64_t> exponents) const;

private:
  std::string id_;
  ScalarSystem scalar_;
  std::vector<std::string> base_units_;
  std::vector<std::pair<std::string, Quantity>> derived_;
};

// Quantities over two snapshots interoperate iff the scalar system and the
// ordered basis agree.
bool same_basis(const UnitSystem& a, const UnitSystem& b);
bool same_basis(const SystemPtr& a, const SystemPtr& b);

// SI snapshot the CLI falls back to: (m, kg, s) over Field-Rational with
// N, Pa, J, W, Hz, km, h, min derived.
SystemPtr builtin_si_system();

}  // namespace qspace
