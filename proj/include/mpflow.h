/* C interface to the multi-player integer network-flow solver.
 *
 * Usage: create a problem from a JSON instance document, solve it (optionally
 * passing a JSON options object that overrides the document's "options"),
 * then read the result strings. All returned strings are owned by the handle
 * and stay valid until mpf_problem_free.
 */
#ifndef MPFLOW_H
#define MPFLOW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mpf_problem mpf_problem;

/* Status / error codes. */
#define MPF_OK 0
#define MPF_EMPTY_FEASIBLE 2 /* F empty and no penalty fallback requested */
#define MPF_EPARSE 3         /* schema or syntax error in input */
#define MPF_EINVAL 4         /* invalid network or option values */
#define MPF_ENOBASIS 5       /* no unimodular basis found */
#define MPF_ERESOURCE 6      /* configured budget or cap exceeded */
#define MPF_EINTERNAL 7

/* Parses and validates an instance. On failure returns a nonzero code and,
 * when out is non-NULL, *out still receives a handle whose
 * mpf_problem_error() describes the failure (free it as usual). */
int mpf_problem_create(const char* json, size_t len, mpf_problem** out);

/* Runs the pipeline. options_json may be NULL or a JSON object with the same
 * shape as the document's "options". Returns MPF_OK, MPF_EMPTY_FEASIBLE, or
 * an error code. */
int mpf_problem_solve(mpf_problem* p, const char* options_json);

/* Canonical JSON result; NULL before a successful solve. */
const char* mpf_problem_output_json(const mpf_problem* p);

/* Human-readable report; NULL before a successful solve. */
const char* mpf_problem_report_text(const mpf_problem* p);

/* Last error message, or NULL if none. */
const char* mpf_problem_error(const mpf_problem* p);

void mpf_problem_free(mpf_problem* p);

/* Stable name for a status code ("ok", "empty_feasible", ...). */
const char* mpf_errcode_name(int code);

#ifdef __cplusplus
}
#endif

#endif
