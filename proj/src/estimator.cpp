#include "estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "errors.hpp"
#include "numtheory.hpp"

namespace udrange {

const char* method_name(Method m) {
  switch (m) {
    case Method::exact:
      return "exact";
    case Method::asymptotic:
      return "asymptotic";
    case Method::monte_carlo:
      return "monte_carlo";
  }
  return "unknown";
}

namespace {

// mpq_get_d truncates; step to the neighbour when it is closer.
double nearest_double(const mpq_class& q) {
  const double d = q.get_d();
  const double up = std::nextafter(d, q >= 0 ? HUGE_VAL : -HUGE_VAL);
  const mpq_class err_d = abs(q - mpq_class(d));
  const mpq_class err_up = abs(q - mpq_class(up));
  return err_up < err_d ? up : d;
}

unsigned clamp_workers(unsigned workers) { return std::max(1u, workers); }

// Accumulates c_x for j in [lo, hi] into a dense vector indexed by x.
// x_j <= N/j + L, which bounds the vector length for the chunk.
std::vector<std::int64_t> chunk_weights(const FrequencyPlan& plan, const MobiusTable& mu, std::uint64_t lo,
                                        std::uint64_t hi) {
  const std::uint64_t bound = std::min(plan.size(), plan.size() / lo + plan.num_segments());
  std::vector<std::int64_t> c(bound + 1, 0);
  for (std::uint64_t j = lo; j <= hi; ++j) {
    const int mu_j = mu(j);
    if (mu_j == 0) continue;
    c[count_multiples(plan, j)] += mu_j;
  }
  return c;
}

}  // namespace

CoprimeCounter::CoprimeCounter(const FrequencyPlan& plan, const ExactOptions& opts) : n_(plan.size()) {
  const std::uint64_t k_max = plan.max_index();
  if (k_max > opts.sieve_limit)
    throw CapabilityError("exact method: largest index " + std::to_string(k_max) + " exceeds sieve limit " +
                          std::to_string(opts.sieve_limit));
  const MobiusTable mu = sieve_mobius(k_max);

  const std::uint64_t workers = std::min<std::uint64_t>(clamp_workers(opts.workers), k_max);
  std::vector<std::vector<std::int64_t>> parts(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t step = k_max / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = 1 + w * step;
      const std::uint64_t hi = w + 1 == workers ? k_max : (w + 1) * step;
      pool.emplace_back([&, w, lo, hi] { parts[w] = chunk_weights(plan, mu, lo, hi); });
    }
  }

  std::vector<std::int64_t> total(n_ + 1, 0);
  for (const auto& part : parts)
    for (std::size_t x = 0; x < part.size(); ++x) total[x] += part[x];
  for (std::uint64_t x = 1; x <= n_; ++x)
    if (total[x] != 0) weights_.emplace_back(x, total[x]);
}

mpz_class CoprimeCounter::coprime_tuples(unsigned m) const {
  if (m == 0) throw std::invalid_argument("exact method: m must be >= 1");
  mpz_class z = 0;
  mpz_class term;
  for (const auto& [x, c] : weights_) {
    mpz_ui_pow_ui(term.get_mpz_t(), x, m);
    z += term * static_cast<long>(c);
  }
  return z;
}

ProbabilityEstimate CoprimeCounter::estimate(unsigned m) const {
  ExactRatio ratio;
  ratio.numerator = coprime_tuples(m);
  mpz_ui_pow_ui(ratio.denominator.get_mpz_t(), n_, m);

  mpq_class q(ratio.numerator, ratio.denominator);
  q.canonicalize();

  ProbabilityEstimate est;
  est.method = Method::exact;
  est.m = m;
  est.value = std::clamp(nearest_double(q), 0.0, 1.0);
  est.exact = std::move(ratio);
  return est;
}

ProbabilityEstimate prob_exact(const FrequencyPlan& plan, unsigned m, const ExactOptions& opts) {
  if (m == 0) throw std::invalid_argument("exact method: m must be >= 1");
  return CoprimeCounter(plan, opts).estimate(m);
}

ProbabilityEstimate prob_asymptotic(unsigned m, double tol) {
  if (m < 2) throw std::domain_error("asymptotic method: m must be >= 2");
  ProbabilityEstimate est;
  est.method = Method::asymptotic;
  est.m = m;
  // |1/S - 1/zeta| <= |S - zeta| / zeta^2 < tol since zeta > 1.
  est.value = 1.0 / zeta_int(m, tol);
  return est;
}

ProbabilityEstimate prob_montecarlo(const FrequencyPlan& plan, unsigned m, std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers) {
  if (trials == 0) throw std::invalid_argument("monte carlo: trials must be >= 1");
  if (m == 0) throw std::invalid_argument("monte carlo: m must be >= 1");

  const std::uint64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  const std::uint64_t nworkers = std::min<std::uint64_t>(clamp_workers(workers), blocks);
  std::vector<std::uint64_t> hits(nworkers, 0);

  auto run = [&](std::uint64_t w) {
    std::uint64_t local = 0;
    std::uniform_int_distribution<std::uint64_t> pick(0, plan.size() - 1);
    std::vector<std::uint64_t> sel(m);
    for (std::uint64_t b = w; b < blocks; b += nworkers) {
      Rng rng = make_rng(seed, b);
      const std::uint64_t begin = b * kTrialsPerBlock;
      const std::uint64_t end = std::min(trials, begin + kTrialsPerBlock);
      for (std::uint64_t t = begin; t < end; ++t) {
        for (auto& k : sel) k = plan.index_at(pick(rng));
        if (gcd_all(sel) == 1) ++local;
      }
    }
    hits[w] = local;
  };

  if (nworkers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < nworkers; ++w) pool.emplace_back(run, w);
  }

  std::uint64_t total = 0;
  for (auto h : hits) total += h;

  ProbabilityEstimate est;
  est.method = Method::monte_carlo;
  est.m = m;
  est.trials = trials;
  est.value = static_cast<double>(total) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(trials));
  return est;
}

std::uint64_t row_seed(std::uint64_t master, std::size_t plan_index, unsigned m) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(plan_index), static_cast<std::uint32_t>(m)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::vector<SweepRow> sweep(const std::vector<FrequencyPlan>& plans, const SweepConfig& config) {
  if (config.methods.monte_carlo && config.trials == 0 && !config.m_range.empty() && !plans.empty())
    throw std::invalid_argument("sweep: monte carlo requested with zero trials");

  std::vector<SweepRow> rows;
  if (config.m_range.empty()) return rows;

  for (std::size_t p = 0; p < plans.size(); ++p) {
    const FrequencyPlan& plan = plans[p];
    std::optional<CoprimeCounter> counter;
    if (config.methods.exact) counter.emplace(plan, ExactOptions{config.sieve_limit, config.workers});

    for (unsigned m = config.m_range.first; m <= config.m_range.last; ++m) {
      SweepRow row;
      row.plan_index = p;
      row.num_segments = plan.num_segments();
      row.n = plan.size();
      row.m = m;
      row.seed = row_seed(config.seed, p, m);
      if (counter && m >= 1) row.exact = counter->estimate(m).value;
      if (config.methods.asymptotic && m >= 2) row.asymptotic = prob_asymptotic(m, config.zeta_tol).value;
      if (config.methods.monte_carlo && m >= 1) {
        const auto mc = prob_montecarlo(plan, m, config.trials, row.seed, config.workers);
        row.monte_carlo = mc.value;
        row.std_error = mc.std_error;
        row.trials = mc.trials;
      }
      rows.push_back(std::move(row));
      if (m == config.m_range.last) break;  // guards m_range.last == UINT_MAX
    }
  }
  return rows;
}

}  // namespace udrange
