#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spectrum.hpp"

namespace udrange {

/// Scenario plans: f_min = 1 kHz, N = 2^15, band 54-862 MHz, L equal
/// segments spread across the band. L = 1 is the single 54000..86767 run.
FrequencyPlan scenario_plan(std::size_t num_segments);

inline constexpr std::size_t kScenarioSegmentCounts[] = {1, 7, 12};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelfCheckOptions {
  bool quick = false;
  /// Name of a check whose inputs are deliberately corrupted (testing hook).
  std::string fault;
};

/// Names of all built-in checks, in run order.
std::vector<std::string> self_check_names();

/// Runs the built-in invariant checks, reporting each as it finishes.
/// Returns true iff every check passed.
bool run_self_checks(const SelfCheckOptions& opts, const std::function<void(const CheckResult&)>& report);

}  // namespace udrange
