#include "lvo/report.hpp"

#include <sstream>

#include "json.hpp"

namespace lvo {

std::string to_json(const std::vector<Report>& suites, const std::string& config_echo,
                    bool with_timings) {
  nlohmann::ordered_json root;
  root["config"] = config_echo;
  root["suites"] = nlohmann::ordered_json::array();
  int total = 0, passed = 0, failed = 0, skipped = 0;
  for (const auto& s : suites) {
    nlohmann::ordered_json js;
    js["name"] = s.suite;
    js["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : s.checks) {
      nlohmann::ordered_json jc;
      jc["id"] = c.id;
      jc["law"] = c.law;
      jc["status"] = c.status;
      if (!c.witness.empty()) jc["witness"] = c.witness;
      if (with_timings) jc["ms"] = c.ms;
      js["checks"].push_back(jc);
      ++total;
      if (c.status == "pass") ++passed;
      if (c.status == "fail") ++failed;
      if (c.status == "skipped") ++skipped;
    }
    root["suites"].push_back(js);
  }
  root["summary"] = {{"total", total},
                     {"passed", passed},
                     {"failed", failed},
                     {"skipped", skipped},
                     {"ok", failed == 0}};
  return root.dump(2) + "\n";
}

std::string to_text(const std::vector<Report>& suites) {
  std::ostringstream os;
  int total = 0, failed = 0;
  for (const auto& s : suites) {
    for (const auto& c : s.checks) {
      os << "[" << c.status << "] " << s.suite << " :: " << c.id;
      if (!c.witness.empty()) os << "  (" << c.witness << ")";
      os << "\n";
      ++total;
      if (c.status == "fail") ++failed;
    }
  }
  os << (failed == 0 ? "OK" : "FAILED") << ": " << total - failed << "/" << total
     << " checks passed\n";
  return os.str();
}

}  // namespace lvo
