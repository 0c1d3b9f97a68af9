#pragma once

#include <json.hpp>
#include <span>
#include <string>

#include "hyperlog/relations.hpp"

namespace hyperlog {

// {"relation_id", "parameters", "z_points", "residuals", "tolerance", "pass",
//  "evaluations"}; parameters is an object of strings, z_points are complex
// literals as accepted by parse_complex.
nlohmann::json to_json(const RelationReport& report);
RelationReport report_from_json(const nlohmann::json& j);

// One human-readable line; residuals use the same shortest round-trip
// formatting as the JSON output.
std::string format_report_line(const RelationReport& report);

// "PASS m/n" where m counts passing reports.
std::string summary_line(std::span<const RelationReport> reports);

}  // namespace hyperlog
