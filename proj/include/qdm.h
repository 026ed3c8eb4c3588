#ifndef QDM_H
#define QDM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes shared with the CLI exit status. */
#define QDM_OK 0
#define QDM_ERR_CHECK_FAILED 1 /* report produced, golden/validity checks failed */
#define QDM_ERR_INPUT 2        /* malformed input: bad JSON, schema, or argument */
#define QDM_ERR_INTERNAL 3

typedef struct qdm_report qdm_report;

/* All entry points return a QDM_* code. On QDM_OK or QDM_ERR_CHECK_FAILED a
 * report handle is stored in *out (caller frees with qdm_report_free); on any
 * other code *out is NULL and qdm_last_error() describes the failure.
 *
 * data_dir may be NULL: the QDM_DATA_DIR environment variable is consulted,
 * then the compiled-in default. */

/* target: "two-urn", "irr", "roi" or "all". */
int qdm_reproduce(const char* target, const char* data_dir, qdm_report** out);

/* scenario_json: full scenario document text. alpha/phase_deg override the
 * document when non-NULL. */
int qdm_fit(const char* scenario_json, const double* alpha, const double* phase_deg,
            const char* data_dir, qdm_report** out);

int qdm_simulate(const char* scenario_json, int n, uint64_t seed, const char* data_dir,
                 qdm_report** out);

/* operator_json: a square matrix as rows of numbers or [re, im] pairs, or an
 * object with an "entries" field holding one. */
int qdm_check_operator(const char* operator_json, double tol, qdm_report** out);

/* Borrowed, NUL-terminated; valid until qdm_report_free. */
const char* qdm_report_json(const qdm_report* report);
const char* qdm_report_markdown(const qdm_report* report);
int qdm_report_passed(const qdm_report* report); /* 1 passed, 0 failed */
void qdm_report_free(qdm_report* report);

/* Thread-local description of the most recent failure; empty string if none. */
const char* qdm_last_error(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QDM_H */
