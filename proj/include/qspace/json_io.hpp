#pragma once

#include <string>

#include <json.hpp>

#include "qspace/unit_system.hpp"

namespace qspace {

// File format:
// { "id": "si", "scalar_system": "Field-Rational", "base_units": ["m","kg","s"],
//   "derived_units": { "N": { "measure": "1", "exponents": [1, 1, -2] } } }
// Measures are strings: "p/q" or decimal. Exponents follow base_units order.
// Derived-unit order is preserved on round trips.

SystemPtr system_from_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json system_to_json(const UnitSystem& system);

SystemPtr load_system_file(const std::string& path);
std::string system_to_text(const UnitSystem& system);

// Same system over the exact/floating twin of its scalar system; measures
// are converted across backends.
SystemPtr with_scalar_system(const SystemPtr& system, ScalarSystem target);

}  // namespace qspace
