#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "spectrum.hpp"

namespace udrange {

/// Propagation speed, m/s (SI exact).
inline constexpr long double kSpeedOfLight = 299'792'458.0L;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct UdResult {
  std::uint64_t gcd_k = 0;
  long double ud_m = 0.0L;  // c / (gcd_k * f_min)
  bool is_max = false;      // gcd_k == 1
};

/// Unambiguous distance of a selection: c / (gcd(k_i) * f_min).
/// For a single index this is that carrier's wavelength.
UdResult compute_ud(const FrequencyPlan& plan, const Selection& selection);

/// Carrier phase shift per selected index at distance R, each in [0, 2*pi).
///
/// Distances are long double: at 862 MHz a double distance near 10^6 m only
/// resolves the phase to a few nanoradians.
std::vector<double> phase_shifts(const FrequencyPlan& plan, const Selection& selection, long double distance_m);

/// min(|a - b|, 2*pi - |a - b|) for phases in [0, 2*pi).
double circular_distance(double a, double b);

/// Numeric check that UD is a period of the phase vector and that the probe
/// shifts UD/2, UD/3, UD/5 and UD/7 are not. A probe is skipped when it is an
/// exact period by integer arithmetic. Throws std::invalid_argument when
/// tol_rad <= 0.
bool verify_ambiguity(const FrequencyPlan& plan, const Selection& selection, long double distance_m, double tol_rad);

}  // namespace udrange
