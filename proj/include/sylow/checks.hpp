#pragma once

#include <filesystem>
#include <string>
#include <vector>

// Self-contained verification suite: every published claim the library rests
// on, re-derived at desk scale.  Each check is exact; the four with a stated
// wall-clock budget fail when they exceed it.

namespace sylow {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 = no budget
};

struct CheckOptions {
  std::string filter;                // substring of the check name; empty = all
  unsigned jobs = 0;                 // 0 = hardware concurrency
  std::filesystem::path scratch_dir; // exports land here; empty = temp dir
};

// The fixed check list, in order.
std::vector<std::string> verification_check_names();

// Runs every check whose name contains the filter; failures do not stop the
// remaining checks.
std::vector<CheckResult> run_verification_suite(const CheckOptions& options);

}  // namespace sylow
