#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "parking/count.hpp"

namespace parking {

/// One CLI invocation: {"command", "inputs", "result", "elapsed_ms"}.
struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  double elapsed_ms = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(nlohmann::json& j, const RunReport& r);

/// Throws nlohmann::json::exception on missing or mistyped fields.
void from_json(const nlohmann::json& j, RunReport& r);

/// Structural check against the run-report schema. Empty means valid.
std::vector<std::string> validate_run_report(const nlohmann::json& j);

/// Counts as JSON numbers when they fit 64 bits, decimal strings otherwise.
nlohmann::json count_to_json(Count c);

}  // namespace parking
