#include "spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace udrange {

namespace {

std::string describe(std::size_t pos, const Segment& s) {
  return "segment #" + std::to_string(pos) + " (start_index=" + std::to_string(s.start) +
         ", count=" + std::to_string(s.count) + ")";
}

}  // namespace

FrequencyPlan FrequencyPlan::validate(RawPlan raw) {
  if (!(raw.f_min_hz > 0.0) || !std::isfinite(raw.f_min_hz))
    throw PlanError("f_min_hz must be a positive finite number");
  if (raw.segments.empty()) throw PlanError("plan has no segments");

  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < raw.segments.size(); ++i) {
    const Segment& s = raw.segments[i];
    if (s.start == 0) throw PlanError(describe(i, s) + ": start_index must be >= 1");
    if (s.count == 0) throw PlanError(describe(i, s) + ": count must be >= 1");
    if (s.count - 1 > kMax - s.start) throw PlanError(describe(i, s) + ": index range overflows");
  }

  // Sort by start, remembering file positions for diagnostics.
  std::vector<std::size_t> order(raw.segments.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return raw.segments[a].start < raw.segments[b].start; });

  FrequencyPlan plan;
  plan.f_min_hz_ = raw.f_min_hz;
  plan.segments_.reserve(order.size());
  plan.offsets_.reserve(order.size());
  for (std::size_t pos : order) {
    const Segment& s = raw.segments[pos];
    if (!plan.segments_.empty()) {
      const Segment& prev = plan.segments_.back();
      if (s.start <= prev.last()) {
        const auto prev_pos = order[plan.segments_.size() - 1];
        throw PlanError(describe(pos, s) + " overlaps " + describe(prev_pos, prev));
      }
    }
    if (s.count > kMax - plan.total_) throw PlanError("total frequency count overflows");
    plan.offsets_.push_back(plan.total_);
    plan.total_ += s.count;
    plan.segments_.push_back(s);
  }
  return plan;
}

bool FrequencyPlan::contains(std::uint64_t k) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), k,
                             [](std::uint64_t v, const Segment& s) { return v < s.start; });
  if (it == segments_.begin()) return false;
  return std::prev(it)->contains(k);
}

std::uint64_t FrequencyPlan::index_at(std::uint64_t pos) const {
  if (pos >= total_) throw std::out_of_range("index_at: position beyond plan size");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), pos);
  const auto l = static_cast<std::size_t>(std::distance(offsets_.begin(), it)) - 1;
  return segments_[l].start + (pos - offsets_[l]);
}

std::vector<std::uint64_t> FrequencyPlan::enumerate_indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(total_);
  for (const Segment& s : segments_)
    for (std::uint64_t k = s.start; k <= s.last(); ++k) out.push_back(k);
  return out;
}

std::uint64_t count_multiples(const FrequencyPlan& plan, std::uint64_t j) {
  if (j == 0) throw std::invalid_argument("count_multiples: j must be >= 1");
  std::uint64_t x = 0;
  for (const Segment& s : plan.segments()) x += s.last() / j - (s.start - 1) / j;
  return x;
}

Selection make_selection(const FrequencyPlan& plan, std::vector<std::uint64_t> indices) {
  if (indices.empty()) throw SelectionError("selection must contain at least one index");
  for (std::uint64_t k : indices)
    if (!plan.contains(k)) throw SelectionError("index " + std::to_string(k) + " is not in the plan");
  return Selection{std::move(indices)};
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Selection sample_selection(const FrequencyPlan& plan, std::size_t m, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, plan.size() - 1);
  Selection sel;
  sel.indices.resize(m);
  for (auto& k : sel.indices) k = plan.index_at(pick(rng));
  return sel;
}

FrequencyPlan spread_plan(double f_min_hz, std::uint64_t band_first, std::uint64_t band_last, std::uint64_t n,
                          std::size_t num_segments) {
  if (num_segments == 0 || n < num_segments || band_last < band_first)
    throw std::invalid_argument("spread_plan: need 1 <= num_segments <= n and a non-empty band");
  const std::uint64_t base = n / num_segments;
  const std::uint64_t extra = n % num_segments;
  const std::uint64_t widest = base + (extra ? 1 : 0);
  const std::uint64_t band = band_last - band_first + 1;
  if (widest * num_segments > band) throw std::invalid_argument("spread_plan: band too narrow");

  const std::uint64_t stride = num_segments == 1 ? 0 : (band - widest) / (num_segments - 1);
  RawPlan raw{f_min_hz, {}};
  for (std::size_t l = 0; l < num_segments; ++l)
    raw.segments.push_back({band_first + l * stride, base + (l < extra ? 1 : 0)});
  return FrequencyPlan::validate(std::move(raw));
}

}  // namespace udrange
