#include "ranging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "numtheory.hpp"

namespace udrange {

UdResult compute_ud(const FrequencyPlan& plan, const Selection& selection) {
  UdResult r;
  r.gcd_k = gcd_all(selection.indices);
  r.ud_m = kSpeedOfLight / (static_cast<long double>(r.gcd_k) * static_cast<long double>(plan.f_min_hz()));
  r.is_max = r.gcd_k == 1;
  return r;
}

std::vector<double> phase_shifts(const FrequencyPlan& plan, const Selection& selection, long double distance_m) {
  if (!(distance_m >= 0.0L)) throw std::invalid_argument("phase_shifts: distance must be non-negative");
  // Cycles per unit index: f_min * R / c.
  const long double base = static_cast<long double>(plan.f_min_hz()) * distance_m / kSpeedOfLight;
  std::vector<double> out;
  out.reserve(selection.indices.size());
  for (std::uint64_t k : selection.indices) {
    const long double cycles = static_cast<long double>(k) * base;
    const long double frac = cycles - std::floor(cycles);
    double phase = static_cast<double>(frac * 2.0L * std::numbers::pi_v<long double>);
    if (phase >= kTwoPi) phase = 0.0;
    out.push_back(phase);
  }
  return out;
}

double circular_distance(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, kTwoPi - d);
}

namespace {

bool phases_agree(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (circular_distance(a[i], b[i]) > tol) return false;
  return true;
}

}  // namespace

bool verify_ambiguity(const FrequencyPlan& plan, const Selection& selection, long double distance_m, double tol_rad) {
  if (!(tol_rad > 0.0)) throw std::invalid_argument("verify_ambiguity: tol_rad must be positive");
  const UdResult ud = compute_ud(plan, selection);
  const auto ref = phase_shifts(plan, selection, distance_m);
  if (!phases_agree(ref, phase_shifts(plan, selection, distance_m + ud.ud_m), tol_rad)) return false;

  for (std::uint64_t denom : {2u, 3u, 5u, 7u}) {
    // UD/denom is a period iff denom * gcd divides every index.
    bool exact_period = true;
    for (std::uint64_t k : selection.indices)
      if ((k / ud.gcd_k) % denom != 0) exact_period = false;
    if (exact_period) continue;
    const long double shift = ud.ud_m / static_cast<long double>(denom);
    if (phases_agree(ref, phase_shifts(plan, selection, distance_m + shift), tol_rad)) return false;
  }
  return true;
}

}  // namespace udrange
