#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace permrel {

inline constexpr int kReportSchemaVersion = 1;

struct CheckResult {
  std::string check;
  std::string status;  // "pass" | "fail" | "info"
  nlohmann::json data = nlohmann::json::object();
  std::optional<nlohmann::json> witness;
};

struct Report {
  std::string command;
  nlohmann::json config_echo = nlohmann::json::object();
  std::vector<CheckResult> results;
  std::map<std::string, double> timings_ms;

  bool all_pass() const {
    for (const CheckResult& r : results)
      if (r.status == "fail") return false;
    return true;
  }
};

/// Text and JSON renderings carry the same verdicts; JSON follows the
/// versioned schema {schema_version, command, config, results, timings_ms}.
std::string render_text(const Report& report);
std::string render_json(const Report& report);

/// 0 when nothing failed, 2 otherwise (1 is reserved for usage errors).
int report_exit_code(const Report& report);

}  // namespace permrel
