#include "qspace/unit_system.hpp"

#include <algorithm>
#include <cstdint>

namespace qspace {

namespace {

bool symbol_head(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c >= 0x80;
}

bool symbol_tail(unsigned char c) {
  return symbol_head(c) || (c >= '0' && c <= '9');
}

void validate_symbol(std::string_view symbol) {
  if (!is_valid_symbol(symbol))
    fail(ErrorCode::Syntax, "invalid unit symbol '" + std::string(symbol) + "'");
}

}  // namespace

bool is_valid_symbol(std::string_view text) {
  if (text.empty()) return false;
  if (!symbol_head(static_cast<unsigned char>(text[0]))) return false;
  for (char c : text)
    if (!symbol_tail(static_cast<unsigned char>(c))) return false;
  // The multiplication dot U+00B7 is an operator, never part of a symbol.
  if (text.find("\xc2\xb7") != std::string_view::npos) return false;
  return true;
}

UnitSystem::UnitSystem(Key, std::string id, ScalarSystem scalar,
                       std::vector<std::string> base_units)
    : id_(std::move(id)), scalar_(scalar), base_units_(std::move(base_units)) {}

SystemPtr UnitSystem::create(std::string id, ScalarSystem scalar,
                             std::vector<std::string> base_units) {
  if (base_units.empty()) fail(ErrorCode::EmptyBasis, "a basis needs at least one unit");
  for (std::size_t i = 0; i < base_units.size(); ++i) {
    validate_symbol(base_units[i]);
    for (std::size_t j = i + 1; j < base_units.size(); ++j)
      if (base_units[i] == base_units[j])
        fail(ErrorCode::DuplicateSymbol, "duplicate base unit '" + base_units[i] + "'");
  }
  return std::make_shared<UnitSystem>(Key{}, std::move(id), scalar,
                                      std::move(base_units));
}

std::optional<std::size_t> UnitSystem::base_index(std::string_view symbol) const {
  for (std::size_t i = 0; i < base_units_.size(); ++i)
    if (base_units_[i] == symbol) return i;
  return std::nullopt;
}

Quantity UnitSystem::base_quantity(std::size_t index) const {
  if (index >= rank()) throw InternalError("base unit index out of range");
  std::vector<std::int64_t> exps(rank(), 0);
  exps[index] = 1;
  return make_quantity(Scalar::one(scalar_), std::move(exps));
}

SystemPtr UnitSystem::with_derived(std::string symbol, const Quantity& value) const {
  validate_symbol(symbol);
  if (has_symbol(symbol))
    fail(ErrorCode::DuplicateSymbol, "symbol '" + symbol + "' is already defined");
  if (!same_basis(value.system(), shared_from_this()))
    fail(ErrorCode::SystemMismatch, "derived unit lives over a different basis");
  if (!value.is_invertible())
    fail(ErrorCode::NonInvertible, "derived unit '" + symbol + "' must be invertible");
  auto copy = std::make_shared<UnitSystem>(Key{}, id_, scalar_, base_units_);
  copy->derived_ = derived_;
  copy->derived_.emplace_back(std::move(symbol), value);
  return copy;
}

std::optional<Quantity> UnitSystem::unit(std::string_view symbol) const {
  if (auto i = base_index(symbol)) return base_quantity(*i);
  for (const auto& [name, value] : derived_)
    if (name == symbol) return value;
  return std::nullopt;
}

bool UnitSystem::has_symbol(std::string_view symbol) const {
  if (base_index(symbol)) return true;
  return std::any_of(derived_.begin(), derived_.end(),
                     [&](const auto& d) { return d.first == symbol; });
}

Dimension UnitSystem::make_dim(std::vector<std::int64_t> exponents) const {
  return Dimension(shared_from_this(), std::move(exponents));
}

Quantity UnitSystem::make_quantity(Scalar measure,
                                   std::vector<std::int64_t> exponents) const {
  return Quantity(std::move(measure), make_dim(std::move(exponents)));
}

bool same_basis(const UnitSystem& a, const UnitSystem& b) {
  return a.scalar_system() == b.scalar_system() && a.base_units() == b.base_units();
}

bool same_basis(const SystemPtr& a, const SystemPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_basis(*a, *b);
}

SystemPtr builtin_si_system() {
  SystemPtr si = UnitSystem::create("si", ScalarSystem::FieldRational, {"m", "kg", "s"});
  auto q = [&](std::int64_t num, std::vector<std::int64_t> exps) {
    return si->make_quantity(Scalar::from_int(num, si->scalar_system()),
                             std::move(exps));
  };
  si = si->with_derived("N", q(1, {1, 1, -2}));
  si = si->with_derived("Pa", q(1, {-1, 1, -2}));
  si = si->with_derived("J", q(1, {2, 1, -2}));
  si = si->with_derived("W", q(1, {2, 1, -3}));
  si = si->with_derived("Hz", q(1, {0, 0, -1}));
  si = si->with_derived("km", q(1000, {1, 0, 0}));
  si = si->with_derived("h", q(3600, {0, 0, 1}));
  si = si->with_derived("min", q(60, {0, 0, 1}));
  return si;
}

}  // namespace qspace
