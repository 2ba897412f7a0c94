// extern "C" surface over the C++ core. Exceptions never cross this
// boundary; each is mapped to a ud_status and its message kept per thread.

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "udrange/udrange.h"

#include "errors.hpp"
#include "estimator.hpp"
#include "numtheory.hpp"
#include "plan_io.hpp"
#include "ranging.hpp"
#include "report.hpp"
#include "selfcheck.hpp"

struct ud_plan {
  udrange::FrequencyPlan plan;
};

struct ud_table {
  std::vector<udrange::SweepRow> rows;
};

namespace {

thread_local std::string g_last_error;

ud_status fail(ud_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
ud_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return UD_OK;
  } catch (const udrange::PlanError& e) {
    return fail(UD_ERR_PLAN, e.what());
  } catch (const udrange::SelectionError& e) {
    return fail(UD_ERR_SELECTION, e.what());
  } catch (const udrange::CapabilityError& e) {
    return fail(UD_ERR_CAPABILITY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(UD_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(UD_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(UD_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(UD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(UD_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

udrange::Selection selection_of(const ud_plan* plan, const uint64_t* indices, size_t m) {
  require(m == 0 || indices != nullptr, "indices must not be null");
  return udrange::make_selection(plan->plan, std::vector<std::uint64_t>(indices, indices + m));
}

ud_estimate to_c(const udrange::ProbabilityEstimate& e) {
  ud_estimate out{};
  out.value = e.value;
  out.method = static_cast<ud_method>(e.method);
  out.m = e.m;
  out.trials = e.trials;
  out.std_error = e.std_error;
  return out;
}

}  // namespace

extern "C" {

const char* ud_last_error(void) { return g_last_error.c_str(); }

const char* ud_status_name(ud_status status) {
  switch (status) {
    case UD_OK:
      return "ok";
    case UD_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case UD_ERR_PLAN:
      return "plan error";
    case UD_ERR_SELECTION:
      return "invalid selection";
    case UD_ERR_CAPABILITY:
      return "capability exceeded";
    case UD_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void ud_string_free(char* s) { std::free(s); }

ud_status ud_plan_create(double f_min_hz, const uint64_t* starts, const uint64_t* counts, size_t num_segments,
                         ud_plan** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(num_segments == 0 || (starts && counts), "segment arrays must not be null");
    udrange::RawPlan raw{f_min_hz, {}};
    for (size_t i = 0; i < num_segments; ++i) raw.segments.push_back({starts[i], counts[i]});
    *out = new ud_plan{udrange::FrequencyPlan::validate(std::move(raw))};
  });
}

ud_status ud_plan_parse_json(const char* text, ud_plan** out) {
  return guarded([&] {
    require(text && out, "arguments must not be null");
    *out = new ud_plan{udrange::parse_plan(text)};
  });
}

ud_status ud_plan_load(const char* path, ud_plan** out) {
  return guarded([&] {
    require(path && out, "arguments must not be null");
    *out = new ud_plan{udrange::load_plan(path)};
  });
}

ud_status ud_plan_scenario(size_t num_segments, ud_plan** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new ud_plan{udrange::scenario_plan(num_segments)};
  });
}

void ud_plan_destroy(ud_plan* plan) { delete plan; }

ud_status ud_plan_summarize(const ud_plan* plan, ud_plan_summary* out) {
  return guarded([&] {
    require(plan && out, "arguments must not be null");
    const auto& p = plan->plan;
    *out = {p.f_min_hz(), p.num_segments(), p.size(), p.min_index(), p.max_index(), p.span()};
  });
}

ud_status ud_plan_segment(const ud_plan* plan, size_t i, uint64_t* start, uint64_t* count) {
  return guarded([&] {
    require(plan && start && count, "arguments must not be null");
    require(i < plan->plan.num_segments(), "segment index out of range");
    *start = plan->plan.segments()[i].start;
    *count = plan->plan.segments()[i].count;
  });
}

ud_status ud_plan_to_json(const ud_plan* plan, char** out) {
  return guarded([&] {
    require(plan && out, "arguments must not be null");
    *out = copy_string(udrange::plan_to_json(plan->plan));
  });
}

ud_status ud_plan_contains(const ud_plan* plan, uint64_t index, int* out) {
  return guarded([&] {
    require(plan && out, "arguments must not be null");
    *out = plan->plan.contains(index) ? 1 : 0;
  });
}

ud_status ud_count_multiples(const ud_plan* plan, uint64_t j, uint64_t* out) {
  return guarded([&] {
    require(plan && out, "arguments must not be null");
    *out = udrange::count_multiples(plan->plan, j);
  });
}

ud_status ud_plan_indices(const ud_plan* plan, uint64_t* out, size_t capacity) {
  return guarded([&] {
    require(plan && out, "arguments must not be null");
    require(capacity >= plan->plan.size(), "output buffer smaller than plan size");
    size_t i = 0;
    for (const auto& s : plan->plan.segments())
      for (std::uint64_t k = s.start; k <= s.last(); ++k) out[i++] = k;
  });
}

ud_status ud_sample_selection(const ud_plan* plan, size_t m, uint64_t seed, uint64_t* out_indices) {
  return guarded([&] {
    require(plan && (m == 0 || out_indices), "arguments must not be null");
    require(m >= 1, "m must be >= 1");
    auto rng = udrange::make_rng(seed);
    const auto sel = udrange::sample_selection(plan->plan, m, rng);
    std::copy(sel.indices.begin(), sel.indices.end(), out_indices);
  });
}

ud_status ud_compute_ud(const ud_plan* plan, const uint64_t* indices, size_t m, ud_ud_result* out) {
  return guarded([&] {
    require(plan && out, "arguments must not be null");
    const auto r = udrange::compute_ud(plan->plan, selection_of(plan, indices, m));
    *out = {r.gcd_k, static_cast<double>(r.ud_m), r.is_max ? 1 : 0};
  });
}

ud_status ud_phase_shifts(const ud_plan* plan, const uint64_t* indices, size_t m, double distance_m,
                          double* out_phases) {
  return guarded([&] {
    require(plan && out_phases, "arguments must not be null");
    const auto phases = udrange::phase_shifts(plan->plan, selection_of(plan, indices, m), distance_m);
    std::copy(phases.begin(), phases.end(), out_phases);
  });
}

ud_status ud_verify_ambiguity(const ud_plan* plan, const uint64_t* indices, size_t m, double distance_m,
                              double tol_rad, int* out) {
  return guarded([&] {
    require(plan && out, "arguments must not be null");
    *out = udrange::verify_ambiguity(plan->plan, selection_of(plan, indices, m), distance_m, tol_rad) ? 1 : 0;
  });
}

ud_status ud_zeta_int(unsigned m, double tol, double* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = udrange::zeta_int(m, tol);
  });
}

ud_status ud_gcd_all(const uint64_t* values, size_t n, uint64_t* out) {
  return guarded([&] {
    require(out && (n == 0 || values), "arguments must not be null");
    *out = udrange::gcd_all(std::span<const std::uint64_t>(values, n));
  });
}

ud_status ud_prob_exact(const ud_plan* plan, unsigned m, uint64_t sieve_limit, unsigned workers, ud_estimate* out,
                        char** numerator, char** denominator) {
  return guarded([&] {
    require(plan && out, "arguments must not be null");
    udrange::ExactOptions opts;
    if (sieve_limit) opts.sieve_limit = sieve_limit;
    opts.workers = workers;
    const auto est = udrange::prob_exact(plan->plan, m, opts);
    std::string num = est.exact->numerator.get_str();
    std::string den = est.exact->denominator.get_str();
    char* n_out = numerator ? copy_string(num) : nullptr;
    char* d_out = nullptr;
    try {
      d_out = denominator ? copy_string(den) : nullptr;
    } catch (...) {
      std::free(n_out);
      throw;
    }
    if (numerator) *numerator = n_out;
    if (denominator) *denominator = d_out;
    *out = to_c(est);
  });
}

ud_status ud_prob_asymptotic(unsigned m, double tol, ud_estimate* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = to_c(udrange::prob_asymptotic(m, tol));
  });
}

ud_status ud_prob_montecarlo(const ud_plan* plan, unsigned m, uint64_t trials, uint64_t seed, unsigned workers,
                             ud_estimate* out) {
  return guarded([&] {
    require(plan && out, "arguments must not be null");
    *out = to_c(udrange::prob_montecarlo(plan->plan, m, trials, seed, workers));
  });
}

ud_status ud_sweep(const ud_plan* const* plans, size_t num_plans, const ud_sweep_config* config, ud_table** out) {
  return guarded([&] {
    require(config && out && (num_plans == 0 || plans), "arguments must not be null");
    std::vector<udrange::FrequencyPlan> list;
    for (size_t i = 0; i < num_plans; ++i) {
      require(plans[i] != nullptr, "plan handle must not be null");
      list.push_back(plans[i]->plan);
    }
    udrange::SweepConfig cfg;
    cfg.m_range = {config->m_first, config->m_last};
    cfg.methods = {(config->methods & UD_METHODS_EXACT) != 0, (config->methods & UD_METHODS_ASYMPTOTIC) != 0,
                   (config->methods & UD_METHODS_MONTE_CARLO) != 0};
    cfg.trials = config->trials;
    cfg.seed = config->seed;
    cfg.workers = config->workers;
    if (config->sieve_limit) cfg.sieve_limit = config->sieve_limit;
    *out = new ud_table{udrange::sweep(list, cfg)};
  });
}

size_t ud_table_rows(const ud_table* table) { return table ? table->rows.size() : 0; }

ud_status ud_table_row(const ud_table* table, size_t i, ud_sweep_row* out) {
  return guarded([&] {
    require(table && out, "arguments must not be null");
    require(i < table->rows.size(), "row index out of range");
    const auto& r = table->rows[i];
    *out = ud_sweep_row{};
    out->plan_index = r.plan_index;
    out->num_segments = r.num_segments;
    out->n = r.n;
    out->m = r.m;
    out->has_exact = r.exact.has_value();
    out->exact = r.exact.value_or(0.0);
    out->has_asymptotic = r.asymptotic.has_value();
    out->asymptotic = r.asymptotic.value_or(0.0);
    out->has_monte_carlo = r.monte_carlo.has_value();
    out->monte_carlo = r.monte_carlo.value_or(0.0);
    out->std_error = r.std_error.value_or(0.0);
    out->trials = r.trials;
    out->seed = r.seed;
  });
}

ud_status ud_table_render(const ud_table* table, ud_format format, char** out) {
  return guarded([&] {
    require(table && out, "arguments must not be null");
    require(format == UD_FORMAT_CSV || format == UD_FORMAT_JSON, "unknown format");
    *out = copy_string(udrange::render_sweep(
        table->rows, format == UD_FORMAT_CSV ? udrange::TableFormat::csv : udrange::TableFormat::json));
  });
}

void ud_table_destroy(ud_table* table) { delete table; }

ud_status ud_self_check(int quick, const char* fault, ud_check_callback callback, void* user, int* all_passed) {
  return guarded([&] {
    require(all_passed != nullptr, "all_passed must not be null");
    udrange::SelfCheckOptions opts{quick != 0, fault ? fault : ""};
    if (!opts.fault.empty()) {
      const auto names = udrange::self_check_names();
      require(std::find(names.begin(), names.end(), opts.fault) != names.end(), "unknown check name for fault");
    }
    const bool ok = udrange::run_self_checks(opts, [&](const udrange::CheckResult& r) {
      if (!callback) return;
      const ud_check_result c{r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str()};
      callback(&c, user);
    });
    *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
