#include "qspace/dimension.hpp"

#include <algorithm>

#include "qspace/rational.hpp"
#include "qspace/unit_system.hpp"

namespace qspace {

namespace {

void require_same_basis(const Dimension& a, const Dimension& b) {
  if (!same_basis(a.system(), b.system()))
    fail(ErrorCode::SystemMismatch, "dimensions live over different unit systems");
}

}  // namespace

Dimension::Dimension(SystemPtr system, std::vector<std::int64_t> exponents)
    : system_(std::move(system)), exponents_(std::move(exponents)) {
  if (!system_) throw InternalError("dimension without a unit system");
  if (exponents_.size() != system_->rank())
    fail(ErrorCode::RankMismatch,
         "expected " + std::to_string(system_->rank()) + " exponents, got " +
             std::to_string(exponents_.size()));
}

Dimension Dimension::identity(SystemPtr system) {
  if (!system) throw InternalError("dimension without a unit system");
  std::vector<std::int64_t> zeros(system->rank(), 0);
  return Dimension(std::move(system), std::move(zeros));
}

bool Dimension::is_identity() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::int64_t k) { return k == 0; });
}

std::string Dimension::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(exponents_[i]);
  }
  return s + ")";
}

bool operator==(const Dimension& a, const Dimension& b) {
  return same_basis(a.system(), b.system()) && a.exponents_ == b.exponents_;
}

Dimension operator*(const Dimension& a, const Dimension& b) {
  require_same_basis(a, b);
  std::vector<std::int64_t> exps(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    exps[i] = checked_add(a.exponents()[i], b.exponents()[i]);
  return Dimension(a.system(), std::move(exps));
}

Dimension inverse(const Dimension& a) {
  std::vector<std::int64_t> exps(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) exps[i] = checked_neg(a.exponents()[i]);
  return Dimension(a.system(), std::move(exps));
}

Dimension pow(const Dimension& a, std::int64_t k) {
  std::vector<std::int64_t> exps(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) exps[i] = checked_mul(a.exponents()[i], k);
  return Dimension(a.system(), std::move(exps));
}

}  // namespace qspace
