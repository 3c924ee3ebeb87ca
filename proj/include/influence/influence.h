/*
 * influence -- variable influence analysis over labeled transition systems.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed here; every fallible call returns an ia_status and leaves a
 * human-readable message in ia_last_error() (thread local) on failure.
 * Strings returned through `char**` out-parameters are heap copies owned by
 * the caller; release them with ia_string_free().
 */

#ifndef INFLUENCE_INFLUENCE_H
#define INFLUENCE_INFLUENCE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ia_status {
  IA_OK = 0,
  IA_ERROR_PARSE = 1,    /* malformed source or .aut text */
  IA_ERROR_ARGUMENT = 2, /* unknown state/variable, bad option, ... */
  IA_ERROR_LIMIT = 3,    /* blk export size guard tripped */
  IA_ERROR_MISMATCH = 4, /* oracle cross-check found a disagreement */
  IA_ERROR_INTERNAL = 5
} ia_status;

typedef enum ia_variant {
  IA_VARIANT_IA1 = 1, /* reachability-preserving (conditions only) */
  IA_VARIANT_IA2 = 2, /* safety-preserving (conditions + assertions) */
  IA_VARIANT_IA3 = 3, /* same equations as IA2 */
  IA_VARIANT_IA4 = 4  /* liveness-preserving (external property variables) */
} ia_variant;

typedef enum ia_format {
  IA_FORMAT_TABLE = 0,
  IA_FORMAT_JSON = 1
} ia_format;

typedef struct ia_lts ia_lts;
typedef struct ia_analysis ia_analysis;

/* Library version string, e.g. "1.0.0". Static storage; do not free. */
const char* ia_version(void);

/* Message describing the most recent failure on this thread. Static
 * thread-local storage; valid until the next failing call. */
const char* ia_last_error(void);

void ia_string_free(char* text);

/* --- models ------------------------------------------------------------ */

/* Builds the transition system of a mini-language program: parses the text,
 * derives the control flow graph and splits each condition/assignment into
 * single-variable labels. */
ia_status ia_lts_from_source(const char* text, ia_lts** out);

/* Reads an Aldebaran .aut text. Labels must be tau (`i`), "BOOL v",
 * "ASSERT v", "ASSIGN t" or "ASSIGN t s"; anything else is an error. */
ia_status ia_lts_from_aut(const char* text, ia_lts** out);

void ia_lts_free(ia_lts* lts);

uint32_t ia_lts_state_count(const ia_lts* lts);
uint32_t ia_lts_initial_state(const ia_lts* lts);
uint64_t ia_lts_transition_count(const ia_lts* lts);

/* Sorted universe of variables occurring on transition labels. The returned
 * name is borrowed from the handle; NULL if index is out of range. */
uint32_t ia_lts_variable_count(const ia_lts* lts);
const char* ia_lts_variable(const ia_lts* lts, uint32_t index);

/* Canonical .aut serialization (sorted transitions, LF endings). */
ia_status ia_lts_to_aut(const ia_lts* lts, char** out_text);

/* --- analysis ----------------------------------------------------------- */

/* Runs the influence analysis over all reachable states. `property_vars`
 * (nullable when count is 0) is only meaningful for IA_VARIANT_IA4 and must
 * name variables of the model. `jobs` > 1 partitions the states across that
 * many workers; the result is identical to the single-threaded run. The
 * handle borrows `lts`, which must stay alive for the handle's lifetime. */
ia_status ia_analyze(const ia_lts* lts, ia_variant variant,
                     const char* const* property_vars,
                     uint32_t property_var_count, uint32_t jobs,
                     ia_analysis** out);

void ia_analysis_free(ia_analysis* analysis);

/* 1 if `var` is kept (significant) at `state`, 0 if hidden, -1 on error. */
int ia_analysis_keeps(const ia_analysis* analysis, uint32_t state,
                      const char* var);

/* Deterministic keep/hide report; see the README for both formats. */
ia_status ia_analysis_report(const ia_analysis* analysis, ia_format format,
                             char** out_text);

/* DOT rendering of the boolean subgraph justifying the verdict of
 * Y_state(var): a shortest witness path to a TRUE leaf for true verdicts,
 * the dependency-closed explored region for false ones. */
ia_status ia_analysis_diagnose(ia_analysis* analysis, uint32_t state,
                               const char* var, char** out_dot);

/* Recomputes every reachable verdict with the global fixed-point solver and
 * compares: IA_OK when all agree, IA_ERROR_MISMATCH otherwise. */
ia_status ia_analysis_check_oracle(const ia_analysis* analysis);

/* Exact resolution counters of the analysis' solver store. */
ia_status ia_analysis_stats(const ia_analysis* analysis,
                            uint64_t* expansions, uint64_t* stable_true,
                            uint64_t* stable_false);

/* --- equation block export ---------------------------------------------- */

/* Parameterless `block mu B is ... end block` encoding of the variant's
 * equations over the model's variables. `eval_var` (nullable) appends an
 * `eval B:Y1_<var>` clause. The block is quadratic in the variable count;
 * exports above `max_variables` (0 picks the default of 64) fail with
 * IA_ERROR_LIMIT unless `force` is nonzero. */
ia_status ia_export_blk(const ia_lts* lts, ia_variant variant,
                        const char* const* property_vars,
                        uint32_t property_var_count, const char* eval_var,
                        uint32_t max_variables, int force, char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* INFLUENCE_INFLUENCE_H */
