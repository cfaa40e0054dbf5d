#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "machzero/scenario.hpp"

namespace machzero {

/// Scenario from a JSON object whose keys mirror the Scenario fields. `kappa`,
/// when given, overrides the file; a kappa found in neither place is a
/// ValidationError. Errors carry the offending key path.
Scenario scenario_from_json(const nlohmann::json& j, std::optional<double> kappa = std::nullopt);

/// Reads and validates a scenario file. Throws ParseError when the file cannot
/// be read or is not JSON.
Scenario parse_scenario(const std::string& path, std::optional<double> kappa = std::nullopt);

nlohmann::json to_json(const Scenario& s);

} // namespace machzero
