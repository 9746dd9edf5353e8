#pragma once

#include <string>
#include <vector>

#include "theta/check.hpp"

namespace theta {

struct Summary {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  bool resource_limit = false;
};

Summary summarize(const std::vector<CheckResult>& results);

// Versioned machine-readable report; stable key order, so consecutive runs
// differ at most in the timing metrics.
std::string report_json(const std::string& suite, const std::vector<CheckResult>& results);

// Human-readable report: one line per check plus a summary line.
std::string report_text(const std::string& suite, const std::vector<CheckResult>& results);

// 0 all pass, 1 at least one failure, 3 an internal limit fired.
int report_exit_code(const std::vector<CheckResult>& results);

} // namespace theta
