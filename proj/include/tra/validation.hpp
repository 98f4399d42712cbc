#pragma once

#include <string>
#include <vector>

namespace tra::validation {

struct CheckResult {
  std::string entry;
  std::string check;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

// Every module invariant, as a machine-checkable suite. `quick` trims the
// slowest sweeps (the CLI default runs everything).
std::vector<CheckResult> run_all(bool quick = false);

std::string report_text(const std::vector<CheckResult>& results);  // CSV-style

}  // namespace tra::validation
