#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace udrange {

/// Contiguous run of grid indices [start, start + count - 1].
struct Segment {
  std::uint64_t start = 0;
  std::uint64_t count = 0;

  std::uint64_t last() const { return start + count - 1; }
  bool contains(std::uint64_t k) const { return k >= start && k <= last(); }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Candidate plan as read from a file or built by a caller; not yet checked.
struct RawPlan {
  double f_min_hz = 0.0;
  std::vector<Segment> segments;
};

/// Validated frequency plan: f_min and L sorted, disjoint index segments.
///
/// Frequency k * f_min is available iff k lies in one of the segments.
/// Segments are stored by (start, count) and never materialized, so counting
/// queries run in O(L) regardless of N.
class FrequencyPlan {
 public:
  /// Throws PlanError on non-positive f_min, an empty segment list, zero
  /// start or count, overlapping segments, or 64-bit overflow. Segment order
  /// in `raw` does not matter.
  static FrequencyPlan validate(RawPlan raw);

  double f_min_hz() const { return f_min_hz_; }
  std::span<const Segment> segments() const { return segments_; }

  std::size_t num_segments() const { return segments_.size(); }  // L
  std::uint64_t size() const { return total_; }                   // N
  std::uint64_t min_index() const { return segments_.front().start; }  // n0
  std::uint64_t max_index() const { return segments_.back().last(); }  // k_max
  std::uint64_t span() const { return max_index() - min_index() + 1; }  // N0

  bool contains(std::uint64_t k) const;

  /// The `pos`-th smallest index, pos in [0, N).
  std::uint64_t index_at(std::uint64_t pos) const;

  /// All N indices in ascending order.
  std::vector<std::uint64_t> enumerate_indices() const;

  friend bool operator==(const FrequencyPlan&, const FrequencyPlan&) = default;

 private:
  FrequencyPlan() = default;

  double f_min_hz_ = 0.0;
  std::vector<Segment> segments_;
  std::vector<std::uint64_t> offsets_;  // offsets_[l] = sum of counts before segment l
  std::uint64_t total_ = 0;
};

/// x_j: how many indices of the plan are divisible by j. Throws
/// std::invalid_argument for j = 0.
std::uint64_t count_multiples(const FrequencyPlan& plan, std::uint64_t j);

/// Ordered M-tuple of plan indices used for one measurement.
struct Selection {
  std::vector<std::uint64_t> indices;
};

/// Checks membership of every index; throws SelectionError otherwise.
Selection make_selection(const FrequencyPlan& plan, std::vector<std::uint64_t> indices);

/// Random engine used for all sampling.
using Rng = std::mt19937_64;

/// Generator for substream `stream` of `seed`. Distinct (seed, stream)
/// pairs give independently seeded engines.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Draws `m` indices uniformly and independently (with replacement).
Selection sample_selection(const FrequencyPlan& plan, std::size_t m, Rng& rng);

/// Plan with `num_segments` segments of (nearly) equal count totalling `n`,
/// the first starting at `band_first` and the last ending no later than
/// `band_last`, starts evenly spaced. Leftover counts go to the first
/// segments, one each.
FrequencyPlan spread_plan(double f_min_hz, std::uint64_t band_first, std::uint64_t band_last, std::uint64_t n,
                          std::size_t num_segments);

}  // namespace udrange
