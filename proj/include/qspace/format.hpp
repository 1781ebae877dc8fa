#pragma once

#include <string>

#include "qspace/quantity.hpp"

namespace qspace {

struct FormatOptions {
  // Replace the whole unit part by one derived symbol whose exponent vector
  // matches exactly (first match in table order); the measure is rescaled.
  bool substitute_derived = false;
};

// Canonical text: "<measure> <b1^k1·...>", zero exponents and exponent 1
// omitted; dimensionless quantities print as "<measure> [1]". The output
// parses back to the same value.
std::string format_quantity(const Quantity& q, const FormatOptions& options = {});

// Just the unit part ("m·s^-2", or "[1]").
std::string format_units(const Dimension& dim);

}  // namespace qspace
