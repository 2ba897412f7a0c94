// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "udrange/udrange.h"

namespace {

ud_plan* make(double f_min, std::vector<uint64_t> starts, std::vector<uint64_t> counts) {
  ud_plan* p = nullptr;
  REQUIRE(ud_plan_create(f_min, starts.data(), counts.data(), starts.size(), &p) == UD_OK);
  return p;
}

}  // namespace

TEST_CASE("plan lifecycle and summary") {
  ud_plan* p = make(1000.0, {54000}, {32768});
  ud_plan_summary s{};
  REQUIRE(ud_plan_summarize(p, &s) == UD_OK);
  CHECK(s.num_segments == 1);
  CHECK(s.size == 32768);
  CHECK(s.min_index == 54000);
  CHECK(s.max_index == 86767);
  CHECK(s.span == 32768);

  uint64_t x = 0;
  CHECK(ud_count_multiples(p, 7, &x) == UD_OK);
  CHECK(x == 4681);
  CHECK(ud_count_multiples(p, 0, &x) == UD_ERR_INVALID_ARGUMENT);

  int in = -1;
  CHECK(ud_plan_contains(p, 53999, &in) == UD_OK);
  CHECK(in == 0);

  char* js = nullptr;
  REQUIRE(ud_plan_to_json(p, &js) == UD_OK);
  ud_plan* q = nullptr;
  REQUIRE(ud_plan_parse_json(js, &q) == UD_OK);
  ud_string_free(js);
  uint64_t start = 0, count = 0;
  CHECK(ud_plan_segment(q, 0, &start, &count) == UD_OK);
  CHECK(start == 54000);
  CHECK(count == 32768);
  CHECK(ud_plan_segment(q, 1, &start, &count) == UD_ERR_INVALID_ARGUMENT);
  ud_plan_destroy(q);
  ud_plan_destroy(p);
  ud_plan_destroy(nullptr);
}

TEST_CASE("plan errors carry status and message") {
  const uint64_t starts[] = {10, 12}, counts[] = {5, 3};
  ud_plan* p = nullptr;
  CHECK(ud_plan_create(1000.0, starts, counts, 2, &p) == UD_ERR_PLAN);
  CHECK(p == nullptr);
  CHECK(std::string(ud_last_error()).find("overlaps") != std::string::npos);
  CHECK(ud_plan_parse_json("{", &p) == UD_ERR_PLAN);
  CHECK(ud_plan_load("/nonexistent.json", &p) == UD_ERR_PLAN);
  CHECK(ud_plan_create(1000.0, nullptr, nullptr, 1, &p) == UD_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ud_status_name(UD_ERR_CAPABILITY)) == "capability exceeded");
}

TEST_CASE("indices and sampling") {
  ud_plan* p = make(1000.0, {1, 5}, {2, 2});
  std::vector<uint64_t> idx(4);
  REQUIRE(ud_plan_indices(p, idx.data(), idx.size()) == UD_OK);
  CHECK(idx == std::vector<uint64_t>{1, 2, 5, 6});
  CHECK(ud_plan_indices(p, idx.data(), 3) == UD_ERR_INVALID_ARGUMENT);

  std::vector<uint64_t> a(6), b(6);
  REQUIRE(ud_sample_selection(p, 6, 7, a.data()) == UD_OK);
  REQUIRE(ud_sample_selection(p, 6, 7, b.data()) == UD_OK);
  CHECK(a == b);
  ud_plan_destroy(p);
}

TEST_CASE("ud, phases and ambiguity") {
  ud_plan* p = make(1000.0, {54000}, {32768});
  const uint64_t pair[] = {54000, 54001};
  ud_ud_result r{};
  REQUIRE(ud_compute_ud(p, pair, 2, &r) == UD_OK);
  CHECK(r.gcd_k == 1);
  CHECK(r.is_max == 1);
  CHECK(r.ud_m == doctest::Approx(299792.458));

  const uint64_t triple[] = {54000, 60000, 66000};
  REQUIRE(ud_compute_ud(p, triple, 3, &r) == UD_OK);
  CHECK(r.gcd_k == 6000);
  CHECK(r.is_max == 0);

  const uint64_t outside[] = {5};
  CHECK(ud_compute_ud(p, outside, 1, &r) == UD_ERR_SELECTION);
  CHECK(ud_compute_ud(p, pair, 0, &r) == UD_ERR_SELECTION);

  double ph[2];
  REQUIRE(ud_phase_shifts(p, pair, 2, 0.0, ph) == UD_OK);
  CHECK(ph[0] == 0.0);
  CHECK(ud_phase_shifts(p, pair, 2, -1.0, ph) == UD_ERR_INVALID_ARGUMENT);

  int ok = 0;
  REQUIRE(ud_verify_ambiguity(p, pair, 2, 100.0, 1e-6, &ok) == UD_OK);
  CHECK(ok == 1);
  CHECK(ud_verify_ambiguity(p, pair, 2, 100.0, 0.0, &ok) == UD_ERR_INVALID_ARGUMENT);
  ud_plan_destroy(p);
}

TEST_CASE("number theory entry points") {
  double z = 0;
  REQUIRE(ud_zeta_int(2, 1e-12, &z) == UD_OK);
  CHECK(std::fabs(z - M_PI * M_PI / 6) < 1e-12);
  CHECK(ud_zeta_int(1, 1e-12, &z) == UD_ERR_INVALID_ARGUMENT);
  const uint64_t v[] = {12, 18, 30};
  uint64_t g = 0;
  REQUIRE(ud_gcd_all(v, 3, &g) == UD_OK);
  CHECK(g == 6);
  CHECK(ud_gcd_all(v, 0, &g) == UD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("probabilities") {
  ud_plan* tiny = make(1.0, {1}, {4});
  ud_estimate e{};
  char* num = nullptr;
  char* den = nullptr;
  REQUIRE(ud_prob_exact(tiny, 2, 0, 1, &e, &num, &den) == UD_OK);
  CHECK(std::string(num) == "11");
  CHECK(std::string(den) == "16");
  CHECK(e.value == 0.6875);
  CHECK(e.method == UD_METHOD_EXACT);
  ud_string_free(num);
  ud_string_free(den);
  CHECK(ud_prob_exact(tiny, 0, 0, 1, &e, nullptr, nullptr) == UD_ERR_INVALID_ARGUMENT);

  ud_plan* band = make(1000.0, {54000}, {32768});
  CHECK(ud_prob_exact(band, 3, 1000, 1, &e, nullptr, nullptr) == UD_ERR_CAPABILITY);

  REQUIRE(ud_prob_asymptotic(3, 1e-12, &e) == UD_OK);
  CHECK(std::fabs(e.value - 0.83190737258070746868) < 1e-12);
  CHECK(ud_prob_asymptotic(1, 1e-12, &e) == UD_ERR_INVALID_ARGUMENT);

  REQUIRE(ud_prob_montecarlo(band, 5, 20000, 3, 2, &e) == UD_OK);
  CHECK(e.method == UD_METHOD_MONTE_CARLO);
  CHECK(e.trials == 20000);
  CHECK(e.std_error > 0);
  CHECK(ud_prob_montecarlo(band, 5, 0, 3, 2, &e) == UD_ERR_INVALID_ARGUMENT);
  ud_plan_destroy(band);
  ud_plan_destroy(tiny);
}

TEST_CASE("sweep table") {
  ud_plan* plans[3];
  for (int i = 0; i < 3; ++i) REQUIRE(ud_plan_scenario(std::vector<size_t>{1, 7, 12}[i], &plans[i]) == UD_OK);
  ud_sweep_config cfg{3, 5, UD_METHODS_ALL, 2000, 11, 2, 0};
  ud_table* t = nullptr;
  REQUIRE(ud_sweep(plans, 3, &cfg, &t) == UD_OK);
  CHECK(ud_table_rows(t) == 9);
  ud_sweep_row row{};
  REQUIRE(ud_table_row(t, 8, &row) == UD_OK);
  CHECK(row.num_segments == 12);
  CHECK(row.m == 5);
  CHECK(row.has_exact);
  CHECK(row.has_monte_carlo);
  CHECK(row.trials == 2000);
  CHECK(ud_table_row(t, 9, &row) == UD_ERR_INVALID_ARGUMENT);

  char* csv = nullptr;
  REQUIRE(ud_table_render(t, UD_FORMAT_CSV, &csv) == UD_OK);
  CHECK(std::strncmp(csv, "L,N,M,P_exact,P_asymptotic,P_mc,stderr,trials,seed\n", 51) == 0);
  ud_string_free(csv);
  ud_table_destroy(t);

  cfg.trials = 0;
  CHECK(ud_sweep(plans, 3, &cfg, &t) == UD_ERR_INVALID_ARGUMENT);
  for (auto* p : plans) ud_plan_destroy(p);
}

TEST_CASE("self check through the C interface") {
  struct Seen {
    int total = 0;
    int failed = 0;
    std::string failed_name;
  } seen;
  auto cb = [](const ud_check_result* r, void* user) {
    auto* s = static_cast<Seen*>(user);
    ++s->total;
    if (!r->passed) {
      ++s->failed;
      s->failed_name = r->name;
    }
  };
  int all = 0;
  REQUIRE(ud_self_check(1, "zeta_closed_form", cb, &seen, &all) == UD_OK);
  CHECK(all == 0);
  CHECK(seen.failed == 1);
  CHECK(seen.failed_name == "zeta_closed_form");
  CHECK(ud_self_check(1, "no_such_check", cb, &seen, &all) == UD_ERR_INVALID_ARGUMENT);
}
