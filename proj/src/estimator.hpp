#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "spectrum.hpp"

namespace udrange {

enum class Method { exact, asymptotic, monte_carlo };

const char* method_name(Method m);

/// Exact probability as the unreduced ratio Z / N^M.
struct ExactRatio {
  mpz_class numerator;    // Z, number of setwise-coprime ordered M-tuples
  mpz_class denominator;  // N^M
};

/// P(UD = c / f_min) for one M, with provenance.
struct ProbabilityEstimate {
  double value = 0.0;
  Method method = Method::exact;
  unsigned m = 0;
  std::uint64_t trials = 0;  // monte_carlo only
  double std_error = 0.0;    // monte_carlo only
  std::optional<ExactRatio> exact;
};

/// Largest k_max the exact method sieves by default.
inline constexpr std::uint64_t kDefaultSieveLimit = 10'000'000;

struct ExactOptions {
  std::uint64_t sieve_limit = kDefaultSieveLimit;
  unsigned workers = 1;
};

/// Möbius-weighted multiple counts of a plan, reusable across M.
///
/// Z(M) = sum_j mu(j) x_j^M. Since x_j = 0 beyond k_max the sum is finite,
/// and terms are grouped by value: Z(M) = sum_x c_x x^M with
/// c_x = sum of mu(j) over j with x_j = x. The c_x are exact integers, so
/// the result does not depend on how the j-range is split among workers.
class CoprimeCounter {
 public:
  /// Throws CapabilityError when k_max exceeds `opts.sieve_limit`.
  CoprimeCounter(const FrequencyPlan& plan, const ExactOptions& opts = {});

  std::uint64_t plan_size() const { return n_; }

  /// Number of ordered M-tuples from the index set whose gcd is 1.
  mpz_class coprime_tuples(unsigned m) const;

  ProbabilityEstimate estimate(unsigned m) const;

 private:
  std::uint64_t n_ = 0;
  std::vector<std::pair<std::uint64_t, std::int64_t>> weights_;  // (x, c_x), c_x != 0, x >= 1
};

/// Exact P = Z / N^M. Throws std::invalid_argument for m = 0 and
/// CapabilityError when the plan is too large to sieve.
ProbabilityEstimate prob_exact(const FrequencyPlan& plan, unsigned m, const ExactOptions& opts = {});

/// 1 / zeta(m), accurate to `tol`. Throws std::domain_error for m < 2.
ProbabilityEstimate prob_asymptotic(unsigned m, double tol = 1e-12);

/// True when m lies in the regime where the 1/zeta(M) error term is
/// O(1/N), i.e. m > 2.
inline bool asymptotic_regime(unsigned m) { return m > 2; }

/// Monte Carlo estimate over `trials` with-replacement selections.
///
/// Trials are split into fixed blocks; block b draws from substream b of
/// `seed`. Workers share blocks round-robin and only integer counts are
/// combined, so the result is identical for any worker count.
ProbabilityEstimate prob_montecarlo(const FrequencyPlan& plan, unsigned m, std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers = 1);

inline constexpr std::uint64_t kTrialsPerBlock = 4096;

struct MethodSet {
  bool exact = true;
  bool asymptotic = true;
  bool monte_carlo = true;
};

/// Inclusive M interval; empty when first > last.
struct MRange {
  unsigned first = 0;
  unsigned last = 0;
  bool empty() const { return first > last; }
};

struct SweepRow {
  std::size_t plan_index = 0;
  std::size_t num_segments = 0;  // L
  std::uint64_t n = 0;
  unsigned m = 0;
  std::optional<double> exact;
  std::optional<double> asymptotic;
  std::optional<double> monte_carlo;
  std::optional<double> std_error;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;  // seed of this row's Monte Carlo run
};

struct SweepConfig {
  MRange m_range;
  MethodSet methods;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint64_t sieve_limit = kDefaultSieveLimit;
  double zeta_tol = 1e-12;
};

/// Seed for the Monte Carlo run of (plan_index, m) under `master`.
std::uint64_t row_seed(std::uint64_t master, std::size_t plan_index, unsigned m);

/// One row per (plan, m), plan-major. Rows with m < 2 have no asymptotic
/// value. Throws std::invalid_argument when Monte Carlo is requested with
/// zero trials.
std::vector<SweepRow> sweep(const std::vector<FrequencyPlan>& plans, const SweepConfig& config);

}  // namespace udrange
