#include "parking/report.hpp"

namespace parking {

void to_json(nlohmann::json& j, const RunReport& r) {
  j = nlohmann::json{{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}, {"elapsed_ms", r.elapsed_ms}};
}

void from_json(const nlohmann::json& j, RunReport& r) {
  j.at("command").get_to(r.command);
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  j.at("elapsed_ms").get_to(r.elapsed_ms);
}

std::vector<std::string> validate_run_report(const nlohmann::json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) return {"report must be a JSON object"};
  auto require = [&](const char* key, bool (nlohmann::json::*check)() const noexcept, const char* type) {
    const auto it = j.find(key);
    if (it == j.end()) {
      errors.push_back(std::string("missing field '") + key + "'");
    } else if (!((*it).*check)()) {
      errors.push_back(std::string("field '") + key + "' must be " + type);
    }
  };
  require("command", &nlohmann::json::is_string, "a string");
  require("inputs", &nlohmann::json::is_object, "an object");
  require("result", &nlohmann::json::is_object, "an object");
  require("elapsed_ms", &nlohmann::json::is_number, "a number");
  if (const auto it = j.find("elapsed_ms"); it != j.end() && it->is_number() && it->get<double>() < 0) {
    errors.push_back("field 'elapsed_ms' must be non-negative");
  }
  for (const auto& [key, _] : j.items()) {
    if (key != "command" && key != "inputs" && key != "result" && key != "elapsed_ms") {
      errors.push_back("unexpected field '" + key + "'");
    }
  }
  return errors;
}

nlohmann::json count_to_json(Count c) {
  if (fits_u64(c)) return static_cast<std::uint64_t>(c);
  return to_string(c);
}

}  // namespace parking
