#pragma once

#include <string>
#include <vector>

#include "estimator.hpp"

namespace udrange {

enum class TableFormat { csv, json };

/// Renders sweep rows. Columns: L, N, M, P_exact, P_asymptotic, P_mc,
/// stderr, trials, seed. Missing values are empty in CSV and null in JSON.
/// Reals use the shortest round-trip decimal form, so output is a pure
/// function of the rows.
std::string render_sweep(const std::vector<SweepRow>& rows, TableFormat format);

/// Shortest decimal string that parses back to `v` ('.' separator).
std::string format_real(double v);

}  // namespace udrange
