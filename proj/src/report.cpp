#include "permrel/report.hpp"

#include <sstream>

namespace permrel {

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "== " << report.command << " ==\n";
  out << "config: " << report.config_echo.dump() << "\n";
  for (const CheckResult& r : report.results) {
    out << "[" << r.status << "] " << r.check;
    if (!r.data.empty()) out << ": " << r.data.dump();
    if (r.witness) out << " witness=" << r.witness->dump();
    out << "\n";
  }
  double total = 0;
  for (const auto& [name, ms] : report.timings_ms) total += ms;
  out << "timings_ms: total=" << total;
  for (const auto& [name, ms] : report.timings_ms) out << " " << name << "=" << ms;
  out << "\n";
  out << "overall: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_json(const Report& report) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = report.command;
  j["config"] = report.config_echo;
  j["results"] = nlohmann::json::array();
  for (const CheckResult& r : report.results) {
    nlohmann::json e;
    e["check"] = r.check;
    e["status"] = r.status;
    e["data"] = r.data;
    if (r.witness) e["witness"] = *r.witness;
    j["results"].push_back(std::move(e));
  }
  j["timings_ms"] = report.timings_ms;
  j["overall"] = report.all_pass() ? "pass" : "fail";
  return j.dump(2);
}

int report_exit_code(const Report& report) { return report.all_pass() ? 0 : 2; }

}  // namespace permrel
