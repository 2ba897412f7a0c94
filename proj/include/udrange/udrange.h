/*
 * udrange: unambiguous distance of phase-based ranging with hopping
 * frequencies.
 *
 * C interface. All objects are opaque handles owned by the caller and
 * released with the matching *_destroy function. Every fallible call
 * returns a ud_status; on failure a message describing the last error on
 * the calling thread is available from ud_last_error(). Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with ud_string_free().
 */
#ifndef UDRANGE_UDRANGE_H
#define UDRANGE_UDRANGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(UDRANGE_BUILDING)
#    define UDRANGE_API __declspec(dllexport)
#  else
#    define UDRANGE_API __declspec(dllimport)
#  endif
#else
#  define UDRANGE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ud_status {
  UD_OK = 0,
  UD_ERR_INVALID_ARGUMENT = 1, /* bad parameter (m, trials, tolerance, ...) */
  UD_ERR_PLAN = 2,             /* plan could not be read or failed validation */
  UD_ERR_SELECTION = 3,        /* index not in plan, empty selection */
  UD_ERR_CAPABILITY = 4,       /* plan too large for the exact method */
  UD_ERR_INTERNAL = 5
} ud_status;

typedef enum ud_method { UD_METHOD_EXACT = 0, UD_METHOD_ASYMPTOTIC = 1, UD_METHOD_MONTE_CARLO = 2 } ud_method;

typedef enum ud_format { UD_FORMAT_CSV = 0, UD_FORMAT_JSON = 1 } ud_format;

enum {
  UD_METHODS_EXACT = 1u << 0,
  UD_METHODS_ASYMPTOTIC = 1u << 1,
  UD_METHODS_MONTE_CARLO = 1u << 2,
  UD_METHODS_ALL = 7u
};

/* Default maximum largest-index the exact method will sieve. */
#define UD_DEFAULT_SIEVE_LIMIT 10000000ull

/* Speed of light used for every distance, m/s. */
#define UD_SPEED_OF_LIGHT 299792458.0

typedef struct ud_plan ud_plan;
typedef struct ud_table ud_table;

typedef struct ud_plan_summary {
  double f_min_hz;
  size_t num_segments;  /* L */
  uint64_t size;        /* N */
  uint64_t min_index;   /* n0 */
  uint64_t max_index;   /* k_max */
  uint64_t span;        /* N0 = k_max - n0 + 1 */
} ud_plan_summary;

typedef struct ud_ud_result {
  uint64_t gcd_k;
  double ud_m;
  int is_max;
} ud_ud_result;

typedef struct ud_estimate {
  double value;
  ud_method method;
  unsigned m;
  uint64_t trials;   /* Monte Carlo only */
  double std_error;  /* Monte Carlo only */
} ud_estimate;

typedef struct ud_sweep_config {
  unsigned m_first;  /* empty range when m_first > m_last */
  unsigned m_last;
  unsigned methods;  /* UD_METHODS_* mask */
  uint64_t trials;
  uint64_t seed;
  unsigned workers;
  uint64_t sieve_limit; /* 0 selects UD_DEFAULT_SIEVE_LIMIT */
} ud_sweep_config;

/* has_* is 0 when the method was not requested or does not apply. */
typedef struct ud_sweep_row {
  size_t plan_index;
  size_t num_segments;
  uint64_t n;
  unsigned m;
  int has_exact;
  double exact;
  int has_asymptotic;
  double asymptotic;
  int has_monte_carlo;
  double monte_carlo;
  double std_error;
  uint64_t trials;
  uint64_t seed;
} ud_sweep_row;

typedef struct ud_check_result {
  const char* name;
  int passed;
  const char* detail;
} ud_check_result;

typedef void (*ud_check_callback)(const ud_check_result* result, void* user);

UDRANGE_API const char* ud_last_error(void);
UDRANGE_API const char* ud_status_name(ud_status status);
UDRANGE_API void ud_string_free(char* s);

/* Plans */
UDRANGE_API ud_status ud_plan_create(double f_min_hz, const uint64_t* starts, const uint64_t* counts,
                                     size_t num_segments, ud_plan** out);
UDRANGE_API ud_status ud_plan_parse_json(const char* text, ud_plan** out);
UDRANGE_API ud_status ud_plan_load(const char* path, ud_plan** out);
/* Plan of `num_segments` equal segments totalling 2^15 indices over
   54000..862000 at f_min = 1 kHz. */
UDRANGE_API ud_status ud_plan_scenario(size_t num_segments, ud_plan** out);
UDRANGE_API void ud_plan_destroy(ud_plan* plan);
UDRANGE_API ud_status ud_plan_summarize(const ud_plan* plan, ud_plan_summary* out);
UDRANGE_API ud_status ud_plan_segment(const ud_plan* plan, size_t i, uint64_t* start, uint64_t* count);
UDRANGE_API ud_status ud_plan_to_json(const ud_plan* plan, char** out);
UDRANGE_API ud_status ud_plan_contains(const ud_plan* plan, uint64_t index, int* out);
UDRANGE_API ud_status ud_count_multiples(const ud_plan* plan, uint64_t j, uint64_t* out);
/* Writes all N indices ascending into `out`, which must hold N entries. */
UDRANGE_API ud_status ud_plan_indices(const ud_plan* plan, uint64_t* out, size_t capacity);

/* Selections and ranging */
UDRANGE_API ud_status ud_sample_selection(const ud_plan* plan, size_t m, uint64_t seed, uint64_t* out_indices);
UDRANGE_API ud_status ud_compute_ud(const ud_plan* plan, const uint64_t* indices, size_t m, ud_ud_result* out);
UDRANGE_API ud_status ud_phase_shifts(const ud_plan* plan, const uint64_t* indices, size_t m, double distance_m,
                                      double* out_phases);
UDRANGE_API ud_status ud_verify_ambiguity(const ud_plan* plan, const uint64_t* indices, size_t m, double distance_m,
                                          double tol_rad, int* out);

/* Number theory */
UDRANGE_API ud_status ud_zeta_int(unsigned m, double tol, double* out);
UDRANGE_API ud_status ud_gcd_all(const uint64_t* values, size_t n, uint64_t* out);

/* Probability of maximum UD. For the exact method `numerator` and
   `denominator` (may be NULL) receive Z and N^M as decimal strings. */
UDRANGE_API ud_status ud_prob_exact(const ud_plan* plan, unsigned m, uint64_t sieve_limit, unsigned workers,
                                    ud_estimate* out, char** numerator, char** denominator);
UDRANGE_API ud_status ud_prob_asymptotic(unsigned m, double tol, ud_estimate* out);
UDRANGE_API ud_status ud_prob_montecarlo(const ud_plan* plan, unsigned m, uint64_t trials, uint64_t seed,
                                         unsigned workers, ud_estimate* out);

/* Sweeps */
UDRANGE_API ud_status ud_sweep(const ud_plan* const* plans, size_t num_plans, const ud_sweep_config* config,
                               ud_table** out);
UDRANGE_API size_t ud_table_rows(const ud_table* table);
UDRANGE_API ud_status ud_table_row(const ud_table* table, size_t i, ud_sweep_row* out);
UDRANGE_API ud_status ud_table_render(const ud_table* table, ud_format format, char** out);
UDRANGE_API void ud_table_destroy(ud_table* table);

/* Built-in invariant checks. `fault` (may be NULL) names a check whose
   inputs are corrupted, for exercising the failure path. */
UDRANGE_API ud_status ud_self_check(int quick, const char* fault, ud_check_callback callback, void* user,
                                    int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* UDRANGE_UDRANGE_H */
