/* C interface to the empathy-gap audit toolkit. */
#ifndef EGAP_EGAP_H
#define EGAP_EGAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EGAP_API __declspec(dllexport)
#elif defined(EGAP_BUILDING_LIBRARY)
#define EGAP_API __attribute__((visibility("default")))
#else
#define EGAP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum egap_status {
  EGAP_OK = 0,
  EGAP_VALIDATION = 1, /* bad config, input or missing prerequisite stage */
  EGAP_PARTIAL = 2,    /* stage finished but some cells failed or were skipped */
  EGAP_IO = 3,
  EGAP_NETWORK = 4,
  EGAP_INTERNAL = 5,
  EGAP_ARGUMENT = 6
} egap_status;

typedef struct egap_context egap_context;
typedef struct egap_synth_server egap_synth_server;

typedef void (*egap_log_fn)(const char* line, void* user);

/* Message of the last failed call on this thread (empty when none). */
EGAP_API const char* egap_last_error(void);
EGAP_API const char* egap_version(void);

/* Loads a run configuration file. */
EGAP_API egap_status egap_context_open(const char* config_path, egap_context** out);
/* Built-in defaults; configure with egap_set_override. */
EGAP_API egap_status egap_context_open_default(egap_context** out);
EGAP_API void egap_context_close(egap_context* ctx);

/* "section.key=value"; the value is parsed as TOML, bare words as strings. */
EGAP_API egap_status egap_set_override(egap_context* ctx, const char* assignment);
EGAP_API void egap_set_logger(egap_context* ctx, egap_log_fn fn, void* user);

/* Digest of the resolved configuration, 16 hex chars plus NUL; buf must hold 17 bytes. */
EGAP_API egap_status egap_config_digest(egap_context* ctx, char* buf, size_t size);
/* Run directory path; caller frees with egap_free. */
EGAP_API egap_status egap_run_dir(egap_context* ctx, char** out);
/* Summary line of the last stage call on ctx (owned by ctx). */
EGAP_API const char* egap_last_summary(egap_context* ctx);

EGAP_API egap_status egap_ingest(egap_context* ctx);
EGAP_API egap_status egap_rewrite(egap_context* ctx);
/* max_requests = 0 for no limit. */
EGAP_API egap_status egap_run(egap_context* ctx, int resume, uint64_t max_requests, int repair_store);
EGAP_API egap_status egap_parse(egap_context* ctx);
EGAP_API egap_status egap_stats(egap_context* ctx);
EGAP_API egap_status egap_plot(egap_context* ctx);
EGAP_API egap_status egap_report(egap_context* ctx, int force);

/* events < 0: take the count from the corpus or config. */
EGAP_API egap_status egap_prompts_count(egap_context* ctx, int64_t events, uint64_t* out);
/* Renders one prompt pair; both strings are freed with egap_free. */
EGAP_API egap_status egap_prompts_render(egap_context* ctx, const char* category, const char* setting,
                                         const char* perceiver, const char* experiencer, size_t event_index,
                                         char** system_text, char** user_text);
/* Registry as TOML (the configured one, or the built-in one when ctx is NULL). */
EGAP_API egap_status egap_registry_dump(egap_context* ctx, char** out);
EGAP_API void egap_free(void* p);

/* Synthetic endpoint. registry_path may be NULL (spec's registry or built-in). port 0 picks one. */
EGAP_API egap_status egap_synth_start(const char* spec_path, const char* registry_path, const char* host, int port,
                                      egap_synth_server** out);
EGAP_API int egap_synth_port(const egap_synth_server* server);
EGAP_API void egap_synth_wait(egap_synth_server* server);
EGAP_API void egap_synth_stop(egap_synth_server* server);

/* Matrix-level statistics. values: n*n row-major; same_group: n*n, 1 same, 0 different, -1 undefined. */
EGAP_API egap_status egap_gap_score(const double* values, const int8_t* same_group, size_t n, double* out);
EGAP_API egap_status egap_permutation_test(const double* values, const int8_t* same_group, size_t n,
                                           uint64_t permutations, uint64_t seed, double* delta, double* ci_low,
                                           double* ci_high, double* p_one_sided, double* p_two_sided);

#ifdef __cplusplus
}
#endif

#endif
