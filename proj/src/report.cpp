#include "hyperlog/report.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace hyperlog {

nlohmann::json to_json(const RelationReport& report) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  nlohmann::json zs = nlohmann::json::array();
  for (const auto& z : report.z_points) zs.push_back(format_complex(z));
  return {{"relation_id", report.relation_id},
          {"parameters", params},
          {"z_points", zs},
          {"residuals", report.residuals},
          {"tolerance", report.tolerance},
          {"pass", report.pass},
          {"evaluations", report.evaluations}};
}

RelationReport report_from_json(const nlohmann::json& j) {
  RelationReport report;
  report.relation_id = j.at("relation_id").get<std::string>();
  for (const auto& [key, value] : j.at("parameters").items()) {
    report.parameters.emplace_back(key, value.get<std::string>());
  }
  for (const auto& z : j.at("z_points")) {
    report.z_points.push_back(parse_complex(z.get<std::string>()));
  }
  report.residuals = j.at("residuals").get<std::vector<double>>();
  report.tolerance = j.at("tolerance").get<double>();
  report.pass = j.at("pass").get<bool>();
  report.evaluations = j.at("evaluations").get<std::size_t>();
  return report;
}

std::string format_report_line(const RelationReport& report) {
  std::vector<std::string> zs;
  for (const auto& z : report.z_points) zs.push_back(format_complex(z));
  return fmt::format("{} {:<32} max={:.3e} tol={} z=[{}] residuals=[{}]",
                     report.pass ? "PASS" : "FAIL", report.relation_id, report.max_residual(),
                     report.tolerance, fmt::join(zs, ","), fmt::join(report.residuals, ","));
}

std::string summary_line(std::span<const RelationReport> reports) {
  auto passed = std::count_if(reports.begin(), reports.end(),
                              [](const RelationReport& r) { return r.pass; });
  return fmt::format("PASS {}/{}", passed, reports.size());
}

}  // namespace hyperlog
