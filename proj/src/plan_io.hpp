#pragma once

#include <string>
#include <string_view>

#include "spectrum.hpp"

namespace udrange {

// Plan documents look like
//   {"f_min_hz": 1000, "segments": [{"start_index": 54000, "count": 32768}]}
// Segment indices are grid multipliers, not Hz.

/// Parses and validates a plan document. Throws PlanError with a message
/// naming the offending field or segment.
FrequencyPlan parse_plan(std::string_view text);

/// Reads `path` and parses it. Throws PlanError on I/O failure too.
FrequencyPlan load_plan(const std::string& path);

/// Canonical JSON form of a plan (segments sorted), newline-terminated.
std::string plan_to_json(const FrequencyPlan& plan);

}  // namespace udrange
