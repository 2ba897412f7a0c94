#include "selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "estimator.hpp"
#include "numtheory.hpp"
#include "ranging.hpp"

namespace udrange {

FrequencyPlan scenario_plan(std::size_t num_segments) {
  return spread_plan(1000.0, 54'000, 862'000, std::uint64_t{1} << 15, num_segments);
}

namespace {

using Check = CheckResult (*)(bool quick, bool fault);

int mobius_by_factoring(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

CheckResult check_mobius(bool, bool fault) {
  constexpr std::uint64_t kLimit = 10'000;
  const MobiusTable mu = sieve_mobius(kLimit);
  for (std::uint64_t j = 1; j <= kLimit; ++j) {
    int expected = mobius_by_factoring(j);
    if (fault && j == 30) expected = -expected;
    if (mu(j) != expected) return {"mobius_factorization", false, "mismatch at j=" + std::to_string(j)};
  }
  for (std::uint64_t n = 1; n <= kLimit; ++n) {
    int s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      s += mu(d);
      if (d * d != n) s += mu(n / d);
    }
    if (s != (n == 1 ? 1 : 0)) return {"mobius_factorization", false, "divisor sum wrong at n=" + std::to_string(n)};
  }
  return {"mobius_factorization", true, "j <= 10000"};
}

CheckResult check_zeta(bool, bool fault) {
  const double pi = std::numbers::pi;
  const double z2 = zeta_int(2, 1e-12) + (fault ? 1e-9 : 0.0);
  const double z4 = zeta_int(4, 1e-12);
  const double e2 = std::fabs(z2 - pi * pi / 6.0);
  const double e4 = std::fabs(z4 - pi * pi * pi * pi / 90.0);
  std::ostringstream d;
  d << "|zeta(2)-pi^2/6|=" << e2 << " |zeta(4)-pi^4/90|=" << e4;
  return {"zeta_closed_form", e2 < 1e-12 && e4 < 1e-12, d.str()};
}

FrequencyPlan random_small_plan(Rng& rng, std::uint64_t max_n, std::size_t max_segments) {
  std::uniform_int_distribution<std::size_t> nseg(1, max_segments);
  std::uniform_int_distribution<std::uint64_t> gap(0, 20), len(1, std::max<std::uint64_t>(1, max_n / max_segments));
  RawPlan raw{1000.0, {}};
  std::uint64_t next = 1 + gap(rng);
  const std::size_t l = nseg(rng);
  for (std::size_t i = 0; i < l; ++i) {
    const std::uint64_t c = len(rng);
    raw.segments.push_back({next, c});
    next += c + 1 + gap(rng);
  }
  return FrequencyPlan::validate(std::move(raw));
}

CheckResult check_counting(bool quick, bool fault) {
  Rng rng = make_rng(0xC0FFEE);
  const int plans = quick ? 10 : 50;
  for (int i = 0; i < plans; ++i) {
    const FrequencyPlan plan = random_small_plan(rng, 400, 4);
    const auto idx = plan.enumerate_indices();
    for (std::uint64_t j = 1; j <= plan.max_index() + 1; ++j) {
      std::uint64_t brute = static_cast<std::uint64_t>(
          std::count_if(idx.begin(), idx.end(), [j](std::uint64_t k) { return k % j == 0; }));
      if (fault && j == 2) ++brute;
      if (count_multiples(plan, j) != brute)
        return {"count_multiples", false, "plan " + std::to_string(i) + ", j=" + std::to_string(j)};
    }
  }
  return {"count_multiples", true, std::to_string(plans) + " random plans"};
}

// Counts coprime ordered tuples by walking all N^m of them.
std::uint64_t enumerate_coprime(const std::vector<std::uint64_t>& idx, unsigned m) {
  std::vector<std::size_t> pos(m, 0);
  std::uint64_t hits = 0;
  std::vector<std::uint64_t> tuple(m);
  while (true) {
    for (unsigned i = 0; i < m; ++i) tuple[i] = idx[pos[i]];
    if (gcd_all(tuple) == 1) ++hits;
    unsigned i = 0;
    while (i < m && ++pos[i] == idx.size()) pos[i++] = 0;
    if (i == m) break;
  }
  return hits;
}

CheckResult check_exact_enumeration(bool quick, bool fault) {
  Rng rng = make_rng(0x5EED);
  const int plans = quick ? 5 : 20;
  for (int i = 0; i < plans; ++i) {
    const FrequencyPlan plan = random_small_plan(rng, 60, 4);
    const auto idx = plan.enumerate_indices();
    for (unsigned m : {2u, 3u}) {
      mpz_class brute = enumerate_coprime(idx, m);
      if (fault) brute += 1;
      const auto est = prob_exact(plan, m);
      if (est.exact->numerator != brute)
        return {"exact_vs_enumeration", false,
                "plan " + std::to_string(i) + ", m=" + std::to_string(m) + ": " + est.exact->numerator.get_str() +
                    " != " + brute.get_str()};
    }
  }
  return {"exact_vs_enumeration", true, std::to_string(plans) + " random plans, m in {2,3}"};
}

CheckResult check_periodicity(bool quick, bool fault) {
  const int per_plan = quick ? 20 : 100;
  Rng rng = make_rng(0xFACE);
  double worst = 0.0;
  for (std::size_t l : kScenarioSegmentCounts) {
    const FrequencyPlan plan = scenario_plan(l);
    std::uniform_int_distribution<unsigned> msize(1, 13);
    for (int i = 0; i < per_plan; ++i) {
      const Selection sel = sample_selection(plan, msize(rng), rng);
      const UdResult ud = compute_ud(plan, sel);
      const long double max_ud = kSpeedOfLight / static_cast<long double>(plan.f_min_hz());
      const long double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng) * max_ud;
      const long double shift = fault ? ud.ud_m * 1.001L : ud.ud_m;
      const auto a = phase_shifts(plan, sel, r);
      const auto b = phase_shifts(plan, sel, r + shift);
      for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, circular_distance(a[k], b[k]));
      if (!fault && !verify_ambiguity(plan, sel, r, 1e-6))
        return {"ud_periodicity", false, "verify_ambiguity failed"};
    }
  }
  std::ostringstream d;
  d << "max phase gap at R+UD " << worst << " rad";
  return {"ud_periodicity", worst <= 1e-9, d.str()};
}

CheckResult check_asymptotic_gap(bool quick, bool fault) {
  const CoprimeCounter counter(scenario_plan(1));
  double worst = 0.0;
  for (unsigned m = 3; m <= 13; m += quick ? 5 : 1) {
    double exact = counter.estimate(m).value;
    if (fault) exact -= 0.05;
    worst = std::max(worst, std::fabs(exact - prob_asymptotic(m).value));
  }
  std::ostringstream d;
  d << "max |exact - 1/zeta(M)| = " << worst;
  return {"asymptotic_gap", worst <= 0.01, d.str()};
}

CheckResult check_l_independence(bool quick, bool fault) {
  std::vector<CoprimeCounter> counters;
  for (std::size_t l : kScenarioSegmentCounts) counters.emplace_back(scenario_plan(l));
  double worst = 0.0;
  for (unsigned m = 3; m <= 13; m += quick ? 5 : 1) {
    double lo = 1.0, hi = 0.0;
    for (std::size_t i = 0; i < counters.size(); ++i) {
      double v = counters[i].estimate(m).value;
      if (fault && i == 0) v += 0.05;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    worst = std::max(worst, hi - lo);
  }
  std::ostringstream d;
  d << "max spread over L = " << worst;
  return {"l_independence", worst < 0.01, d.str()};
}

CheckResult check_montecarlo(bool quick, bool fault) {
  const FrequencyPlan plan = scenario_plan(7);
  constexpr unsigned kM = 5;
  const std::uint64_t trials = quick ? 4096 : 20'000;
  const double exact = prob_exact(plan, kM).value + (fault ? 0.05 : 0.0);
  int within = 0;
  constexpr int kSeeds = 20;
  for (int s = 0; s < kSeeds; ++s) {
    const auto mc = prob_montecarlo(plan, kM, trials, 1000 + s);
    if (std::fabs(mc.value - exact) <= 2.0 * mc.std_error) ++within;
  }
  return {"montecarlo_calibration", within >= 17,
          std::to_string(within) + "/" + std::to_string(kSeeds) + " seeds within 2 stderr"};
}

struct NamedCheck {
  const char* name;
  Check run;
};

constexpr NamedCheck kChecks[] = {
    {"mobius_factorization", check_mobius},
    {"zeta_closed_form", check_zeta},
    {"count_multiples", check_counting},
    {"exact_vs_enumeration", check_exact_enumeration},
    {"ud_periodicity", check_periodicity},
    {"asymptotic_gap", check_asymptotic_gap},
    {"l_independence", check_l_independence},
    {"montecarlo_calibration", check_montecarlo},
};

}  // namespace

std::vector<std::string> self_check_names() {
  std::vector<std::string> names;
  for (const auto& c : kChecks) names.emplace_back(c.name);
  return names;
}

bool run_self_checks(const SelfCheckOptions& opts, const std::function<void(const CheckResult&)>& report) {
  bool all = true;
  for (const auto& c : kChecks) {
    CheckResult r;
    try {
      r = c.run(opts.quick, opts.fault == c.name);
    } catch (const std::exception& e) {
      r = {c.name, false, std::string("exception: ") + e.what()};
    }
    all = all && r.passed;
    if (report) report(r);
  }
  return all;
}

}  // namespace udrange
