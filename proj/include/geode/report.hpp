#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geode/monomial.hpp"

#include "json.hpp"

namespace geode {

/// Outcome of one identity check: pass iff the residual series is
/// identically zero within the context; otherwise the first failing monomial
/// in canonical order is recorded.
struct CheckResult {
  std::string name;
  int max_degree = 0;
  bool pass = true;
  std::optional<Monomial> failing_monomial;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  void add(CheckResult result) { checks.push_back(std::move(result)); }
  void merge(const VerificationReport& other);
};

/// {"checks":[{"name":..,"degree":..,"pass":..,"failing_monomial":..?},..]}
/// The failing_monomial key is present only on failed checks.
nlohmann::json report_to_json(const VerificationReport& report);

/// One "PASS name" / "FAIL name at <monomial>" line per check.
std::string report_to_table(const VerificationReport& report);

}  // namespace geode
