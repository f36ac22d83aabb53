#include "geode/report.hpp"

#include <algorithm>
#include <sstream>

namespace geode {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& check : report.checks) {
    nlohmann::json entry{
        {"name", check.name}, {"degree", check.max_degree}, {"pass", check.pass}};
    if (check.failing_monomial.has_value()) {
      entry["failing_monomial"] = nlohmann::json{{"t", check.failing_monomial->t_exp},
                                                 {"y", check.failing_monomial->y_exp}};
    }
    checks.push_back(std::move(entry));
  }
  return nlohmann::json{{"checks", checks}};
}

std::string report_to_table(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& check : report.checks) {
    out << (check.pass ? "PASS " : "FAIL ") << check.name
        << " (degree " << check.max_degree << ")";
    if (!check.pass && check.failing_monomial.has_value()) {
      out << " at " << monomial_to_string(*check.failing_monomial);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace geode
