// udrange command-line front end. Talks to the library only through the
// C interface in udrange/udrange.h.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "udrange/udrange.h"

namespace {

using ordered_json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kPlanError = 2,
  kSelectionError = 3,
  kCapability = 4,
  kUsage = 64,
  kInternal = 70,
};

// Thrown to unwind with a specific exit code after printing `what()`.
struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

int exit_code_for(ud_status s) {
  switch (s) {
    case UD_OK:
      return kOk;
    case UD_ERR_PLAN:
      return kPlanError;
    case UD_ERR_SELECTION:
      return kSelectionError;
    case UD_ERR_CAPABILITY:
      return kCapability;
    case UD_ERR_INVALID_ARGUMENT:
      return kUsage;
    case UD_ERR_INTERNAL:
      break;
  }
  return kInternal;
}

void check(ud_status s) {
  if (s != UD_OK) throw CliError(exit_code_for(s), ud_last_error());
}

struct PlanDeleter {
  void operator()(ud_plan* p) const { ud_plan_destroy(p); }
};
struct TableDeleter {
  void operator()(ud_table* t) const { ud_table_destroy(t); }
};
struct StringDeleter {
  void operator()(char* s) const { ud_string_free(s); }
};
using PlanPtr = std::unique_ptr<ud_plan, PlanDeleter>;
using TablePtr = std::unique_ptr<ud_table, TableDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

PlanPtr load_plan(const std::string& path) {
  ud_plan* raw = nullptr;
  check(ud_plan_load(path.c_str(), &raw));
  return PlanPtr(raw);
}

std::string real(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw CliError(kUsage, "invalid " + what + ": '" + text + "'");
  return v;
}

std::vector<std::uint64_t> parse_index_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_u64(item, "index"));
  if (out.empty()) throw CliError(kUsage, "--indices needs at least one index");
  return out;
}

struct Methods {
  bool exact = false;
  bool asymptotic = false;
  bool monte_carlo = false;
};

Methods parse_methods(const std::string& text) {
  Methods m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "exact")
      m.exact = true;
    else if (item == "asymptotic")
      m.asymptotic = true;
    else if (item == "monte_carlo" || item == "mc")
      m.monte_carlo = true;
    else
      throw CliError(kUsage, "unknown method '" + item + "' (expected exact, asymptotic, monte_carlo)");
  }
  if (!m.exact && !m.asymptotic && !m.monte_carlo) throw CliError(kUsage, "--methods selects nothing");
  return m;
}

std::pair<unsigned, unsigned> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw CliError(kUsage, "--m-range must look like A..B");
  const auto a = parse_u64(text.substr(0, dots), "m-range start");
  const auto b = parse_u64(text.substr(dots + 2), "m-range end");
  if (a > 4096 || b > 4096) throw CliError(kUsage, "--m-range bounds must be <= 4096");
  return {static_cast<unsigned>(a), static_cast<unsigned>(b)};
}

std::uint64_t sieve_limit_from_env() {
  const char* env = std::getenv("UD_SIEVE_LIMIT");
  if (!env || !*env) return UD_DEFAULT_SIEVE_LIMIT;
  const auto v = parse_u64(env, "UD_SIEVE_LIMIT");
  if (v == 0) throw CliError(kUsage, "UD_SIEVE_LIMIT must be positive");
  return v;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError(kUsage, "cannot write '" + out_path + "'");
  out << text;
}

// ---------------------------------------------------------------- ud

struct UdArgs {
  std::string plan;
  std::string indices;
  std::size_t select = 0;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

int run_ud(const UdArgs& a) {
  const bool explicit_list = !a.indices.empty();
  if (explicit_list == (a.select > 0)) throw CliError(kUsage, "ud needs exactly one of --indices or --select");
  PlanPtr plan = load_plan(a.plan);

  std::vector<std::uint64_t> idx;
  if (explicit_list) {
    idx = parse_index_list(a.indices);
  } else {
    idx.resize(a.select);
    check(ud_sample_selection(plan.get(), idx.size(), a.seed, idx.data()));
  }

  ud_ud_result r{};
  check(ud_compute_ud(plan.get(), idx.data(), idx.size(), &r));

  std::string text;
  if (a.format == "json") {
    ordered_json doc;
    doc["indices"] = idx;
    doc["gcd"] = r.gcd_k;
    doc["ud_m"] = r.ud_m;
    if (r.ud_m >= 1e4) doc["ud_km"] = r.ud_m / 1000.0;
    doc["is_max"] = r.is_max != 0;
    text = doc.dump(2) + "\n";
  } else {
    std::string list;
    for (std::size_t i = 0; i < idx.size(); ++i) list += (i ? "," : "") + std::to_string(idx[i]);
    text = "indices=" + list + "\n";
    text += "gcd=" + std::to_string(r.gcd_k) + "\n";
    text += "ud_m=" + real(r.ud_m) + "\n";
    if (r.ud_m >= 1e4) text += "ud_km=" + real(r.ud_m / 1000.0) + "\n";
    text += std::string("is_max=") + (r.is_max ? "true" : "false") + "\n";
  }
  emit(text, a.out);
  return kOk;
}

// ---------------------------------------------------------------- prob

struct ProbArgs {
  std::string plan;
  unsigned m = 0;
  std::string methods;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string format = "text";
  std::string out;
};

struct ProbResult {
  std::string method;
  ud_estimate est{};
  std::string numerator, denominator;  // exact only
};

int run_prob(const ProbArgs& a) {
  const Methods methods = parse_methods(a.methods.empty() ? (a.plan.empty() ? "asymptotic" : "exact,asymptotic")
                                                          : a.methods);
  if (methods.monte_carlo != a.trials.has_value())
    throw CliError(kUsage, "--trials is required with, and only with, the monte_carlo method");
  if ((methods.exact || methods.monte_carlo) && a.plan.empty())
    throw CliError(kUsage, "exact and monte_carlo need --plan");

  PlanPtr plan;
  if (!a.plan.empty()) plan = load_plan(a.plan);

  std::vector<ProbResult> results;
  if (methods.exact) {
    ProbResult r;
    r.method = "exact";
    char* num = nullptr;
    char* den = nullptr;
    check(ud_prob_exact(plan.get(), a.m, sieve_limit_from_env(), a.workers, &r.est, &num, &den));
    r.numerator = CString(num).get();
    r.denominator = CString(den).get();
    results.push_back(std::move(r));
  }
  if (methods.asymptotic) {
    ProbResult r;
    r.method = "asymptotic";
    check(ud_prob_asymptotic(a.m, 1e-12, &r.est));
    if (a.m <= 2)
      std::cerr << "warning: m=" << a.m
                << " is outside the regime M > 2 where 1/zeta(M) is within O(1/N) of the exact value\n";
    results.push_back(std::move(r));
  }
  if (methods.monte_carlo) {
    ProbResult r;
    r.method = "monte_carlo";
    check(ud_prob_montecarlo(plan.get(), a.m, *a.trials, a.seed, a.workers, &r.est));
    results.push_back(std::move(r));
  }

  std::string text;
  if (a.format == "json") {
    ordered_json doc;
    doc["m"] = a.m;
    if (!a.plan.empty()) doc["plan"] = a.plan;
    doc["estimates"] = ordered_json::array();
    for (const auto& r : results) {
      ordered_json e;
      e["method"] = r.method;
      e["value"] = r.est.value;
      if (r.method == "exact") {
        e["numerator"] = r.numerator;
        e["denominator"] = r.denominator;
      } else if (r.method == "asymptotic") {
        e["in_regime"] = a.m > 2;
      } else {
        e["std_error"] = r.est.std_error;
        e["trials"] = r.est.trials;
        e["seed"] = a.seed;
      }
      doc["estimates"].push_back(std::move(e));
    }
    text = doc.dump(2) + "\n";
  } else if (a.format == "csv") {
    text = "method,M,value,stderr,trials,numerator,denominator\n";
    for (const auto& r : results) {
      const bool mc = r.method == "monte_carlo";
      text += r.method + ',' + std::to_string(a.m) + ',' + real(r.est.value) + ',' +
              (mc ? real(r.est.std_error) : "") + ',' + (mc ? std::to_string(r.est.trials) : "") + ',' +
              r.numerator + ',' + r.denominator + '\n';
    }
  } else {
    text = "M=" + std::to_string(a.m) + "\n";
    for (const auto& r : results) {
      text += r.method + " " + real(r.est.value);
      if (r.method == "exact") text += " " + r.numerator + "/" + r.denominator;
      if (r.method == "monte_carlo")
        text += " stderr=" + real(r.est.std_error) + " trials=" + std::to_string(r.est.trials) +
                " seed=" + std::to_string(a.seed);
      text += "\n";
    }
  }
  emit(text, a.out);
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::vector<std::string> plans;
  std::string m_range;
  std::string methods = "exact,asymptotic,monte_carlo";
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string format = "csv";
  std::string out;
};

int run_sweep(const SweepArgs& a) {
  const Methods methods = parse_methods(a.methods);
  if (methods.monte_carlo != a.trials.has_value())
    throw CliError(kUsage, "--trials is required with, and only with, the monte_carlo method");
  const auto [first, last] = parse_m_range(a.m_range);

  std::vector<PlanPtr> owned;
  std::vector<const ud_plan*> plans;
  for (const auto& p : a.plans) {
    owned.push_back(load_plan(p));
    plans.push_back(owned.back().get());
  }

  ud_sweep_config cfg{};
  cfg.m_first = first;
  cfg.m_last = last;
  cfg.methods = (methods.exact ? unsigned{UD_METHODS_EXACT} : 0u) | (methods.asymptotic ? unsigned{UD_METHODS_ASYMPTOTIC} : 0u) |
                (methods.monte_carlo ? unsigned{UD_METHODS_MONTE_CARLO} : 0u);
  cfg.trials = a.trials.value_or(0);
  cfg.seed = a.seed;
  cfg.workers = a.workers;
  cfg.sieve_limit = sieve_limit_from_env();

  ud_table* raw = nullptr;
  check(ud_sweep(plans.data(), plans.size(), &cfg, &raw));
  TablePtr table(raw);
  char* rendered = nullptr;
  check(ud_table_render(table.get(), a.format == "json" ? UD_FORMAT_JSON : UD_FORMAT_CSV, &rendered));
  emit(CString(rendered).get(), a.out);
  return kOk;
}

// ---------------------------------------------------------------- verify

int run_verify(bool quick, const std::string& fault) {
  int all = 0;
  auto print = [](const ud_check_result* r, void*) {
    std::cout << (r->passed ? "PASS " : "FAIL ") << r->name << "  " << r->detail << "\n" << std::flush;
  };
  check(ud_self_check(quick ? 1 : 0, fault.empty() ? nullptr : fault.c_str(), print, nullptr, &all));
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unambiguous distance of phase ranging with hopping frequencies"};
  app.require_subcommand(1);

  UdArgs ud;
  auto* ud_cmd = app.add_subcommand("ud", "GCD and unambiguous distance of one selection");
  ud_cmd->add_option("--plan", ud.plan, "Plan file (JSON)")->required();
  ud_cmd->add_option("--indices", ud.indices, "Comma-separated grid indices");
  ud_cmd->add_option("--select", ud.select, "Draw this many random indices instead");
  ud_cmd->add_option("--seed", ud.seed, "Seed for --select");
  ud_cmd->add_option("--format", ud.format)->check(CLI::IsMember({"text", "json"}));
  ud_cmd->add_option("--out", ud.out, "Write output here instead of stdout");

  ProbArgs prob;
  auto* prob_cmd = app.add_subcommand("prob", "Probability that the UD takes its maximum value");
  prob_cmd->add_option("--plan", prob.plan, "Plan file (JSON)");
  prob_cmd->add_option("-m", prob.m, "Number of frequencies per measurement")->required();
  prob_cmd->add_option("--methods", prob.methods, "exact,asymptotic,monte_carlo");
  prob_cmd->add_option("--trials", prob.trials, "Monte Carlo trials");
  prob_cmd->add_option("--seed", prob.seed, "Monte Carlo seed");
  prob_cmd->add_option("--workers", prob.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  prob_cmd->add_option("--format", prob.format)->check(CLI::IsMember({"text", "csv", "json"}));
  prob_cmd->add_option("--out", prob.out, "Write output here instead of stdout");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Table of P over plans and a range of M");
  sweep_cmd->add_option("--plan", sw.plans, "Plan file (JSON); repeatable")->required();
  sweep_cmd->add_option("--m-range", sw.m_range, "Inclusive range A..B")->required();
  sweep_cmd->add_option("--methods", sw.methods, "exact,asymptotic,monte_carlo");
  sweep_cmd->add_option("--trials", sw.trials, "Monte Carlo trials per row");
  sweep_cmd->add_option("--seed", sw.seed, "Master seed");
  sweep_cmd->add_option("--workers", sw.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  sweep_cmd->add_option("--format", sw.format)->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--out", sw.out, "Write output here instead of stdout");

  bool quick = false;
  std::string fault;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in invariant checks");
  verify_cmd->add_flag("--quick", quick, "Reduced sizes");
  verify_cmd->add_option("--inject-fault", fault, "Corrupt the named check (testing hook)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*ud_cmd) return run_ud(ud);
    if (*prob_cmd) return run_prob(prob);
    if (*sweep_cmd) return run_sweep(sw);
    if (*verify_cmd) return run_verify(quick, fault);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
