#include "qspace/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace qspace {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& detail) {
  fail(ErrorCode::BadFile, "malformed unit-system file: " + detail);
}

std::string require_string(const ordered_json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string())
    bad(std::string("'") + key + "' must be a string");
  return doc[key].get<std::string>();
}

std::vector<std::int64_t> read_exponents(const ordered_json& arr, std::size_t rank,
                                         const std::string& symbol) {
  if (!arr.is_array() || arr.size() != rank)
    bad("'" + symbol + "' needs an exponent array of length " + std::to_string(rank));
  std::vector<std::int64_t> exps;
  exps.reserve(rank);
  for (const auto& entry : arr) {
    if (!entry.is_number_integer())
      bad("'" + symbol + "' has a non-integer exponent");
    exps.push_back(entry.get<std::int64_t>());
  }
  return exps;
}

}  // namespace

SystemPtr system_from_json(const ordered_json& doc) {
  if (!doc.is_object()) bad("top level must be an object");
  std::string id = require_string(doc, "id");
  std::string scalar_name = require_string(doc, "scalar_system");
  auto scalar = scalar_system_from_name(scalar_name);
  if (!scalar) bad("unknown scalar system '" + scalar_name + "'");

  if (!doc.contains("base_units") || !doc["base_units"].is_array())
    bad("'base_units' must be an array of symbols");
  std::vector<std::string> base;
  for (const auto& entry : doc["base_units"]) {
    if (!entry.is_string()) bad("'base_units' must contain only strings");
    base.push_back(entry.get<std::string>());
  }

  SystemPtr system = UnitSystem::create(std::move(id), *scalar, std::move(base));

  if (doc.contains("derived_units")) {
    const auto& derived = doc["derived_units"];
    if (!derived.is_object()) bad("'derived_units' must be an object");
    for (const auto& [symbol, body] : derived.items()) {
      if (!body.is_object()) bad("'" + symbol + "' must be an object");
      std::string measure_text = require_string(body, "measure");
      Scalar measure = [&] {
        try {
          return Scalar::parse(measure_text, system->scalar_system());
        } catch (const Error& e) {
          bad("measure of '" + symbol + "': " + e.what());
        }
      }();
      auto exps = read_exponents(body.contains("exponents") ? body["exponents"]
                                                            : ordered_json(),
                                 system->rank(), symbol);
      system = system->with_derived(symbol,
                                    system->make_quantity(measure, std::move(exps)));
    }
  }
  return system;
}

nlohmann::ordered_json system_to_json(const UnitSystem& system) {
  ordered_json doc;
  doc["id"] = system.id();
  doc["scalar_system"] = std::string(scalar_system_info(system.scalar_system()).name);
  doc["base_units"] = system.base_units();
  ordered_json derived = ordered_json::object();
  for (const auto& [symbol, value] : system.derived_units()) {
    ordered_json body;
    body["measure"] = value.measure().str();
    body["exponents"] = value.dim().exponents();
    derived[symbol] = std::move(body);
  }
  doc["derived_units"] = std::move(derived);
  return doc;
}

SystemPtr load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::BadFile, "cannot open '" + path + "'");
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::BadFile, "cannot parse '" + path + "': " + e.what());
  }
  return system_from_json(doc);
}

std::string system_to_text(const UnitSystem& system) {
  return system_to_json(system).dump(2) + "\n";
}

SystemPtr with_scalar_system(const SystemPtr& system, ScalarSystem target) {
  if (!system) throw InternalError("no system to convert");
  if (system->scalar_system() == target) return system;
  SystemPtr out = UnitSystem::create(system->id(), target, system->base_units());
  for (const auto& [symbol, value] : system->derived_units()) {
    Scalar measure = value.measure().exact()
                         ? Scalar::from_rational(value.measure().rational(), target)
                         : Scalar::from_real(value.measure().real(), target);
    out = out->with_derived(symbol,
                            out->make_quantity(measure, value.dim().exponents()));
  }
  return out;
}

}  // namespace qspace
