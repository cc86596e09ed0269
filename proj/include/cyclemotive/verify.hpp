#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cyclemotive::verify {

/// Outcome of one verification suite. `details` carries the values and
/// residues that were compared, plus the first mismatch if any.
struct SuiteResult {
  std::string name;
  int criterion = 0;
  std::string description;
  bool values_ok = false;
  double seconds = 0.0;
  /// Wall-clock ceiling for the suite; 0 means none.
  double time_limit = 0.0;
  std::size_t checks = 0;
  nlohmann::json details;

  bool passed() const { return values_ok && (time_limit <= 0.0 || seconds <= time_limit); }
};

/// Suite names in report order (sorted).
std::vector<std::string> suite_names();

/// Throws Unsupported for an unknown suite.
SuiteResult run_suite(const std::string& name);

/// Runs independent suites concurrently; results are sorted by name.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names);

nlohmann::json report_to_json(const std::vector<SuiteResult>& results);

}  // namespace cyclemotive::verify
