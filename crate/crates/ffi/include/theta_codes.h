#ifndef THETA_CODES_H
#define THETA_CODES_H

/* Generated by cbindgen from the theta-codes-ffi crate. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Families accepted by `tc_run_augment`.
typedef enum TcFamily {
  TcFamilyInvariant = 0,
  TcFamilyPrefix = 1,
  TcFamilyCircular = 2,
  TcFamilySync = 3,
} TcFamily;

// Opaque handle to a parsed problem file.
typedef struct TcProblem TcProblem;

// Opaque handle to a finished report.
typedef struct TcReport TcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// # Safety
// `text` must be a valid NUL-terminated UTF-8 string. On success writes a
// handle to `out` (owned by the caller, release with `tc_problem_free`).
int tc_problem_parse(const char *text, struct TcProblem **out);

// # Safety
// `problem` must come from `tc_problem_parse` and not have been freed.
void tc_problem_free(struct TcProblem *problem);

// Full property report. `delay_cap` and `sync_cap` bound the delay and
// synchronization searches (the CLI default is 8 for both).
//
// # Safety
// `problem` must be a live handle; `out` must be a valid pointer.
int tc_run_check(const struct TcProblem *problem,
                 uint32_t delay_cap,
                 uint32_t sync_cap,
                 struct TcReport **out);

// Invariant free hull and defect data.
//
// # Safety
// `problem` must be a live handle; `out` must be a valid pointer.
int tc_run_hull(const struct TcProblem *problem, struct TcReport **out);

// Family-preserving augmentation. `witness` may be NULL to use the file's
// witness (or the natural choice); a non-NULL value overrides both.
// `sync_k` is the synchronization delay for the sync family.
//
// # Safety
// `problem` must be a live handle; `witness` NULL or a valid NUL-terminated
// UTF-8 string; `out` a valid pointer.
int tc_run_augment(const struct TcProblem *problem,
                   enum TcFamily family,
                   const char *witness,
                   uint32_t sync_k,
                   struct TcReport **out);

// Embedding into a complete invariant code. `max_enum` bounds the length
// of the members enumerated into the report (the CLI default is 24).
//
// # Safety
// `problem` must be a live handle; `out` must be a valid pointer.
int tc_run_complete(const struct TcProblem *problem, size_t max_enum, struct TcReport **out);

// JSON rendering of a report; release the string with `tc_string_free`.
//
// # Safety
// `report` must be a live handle; `out` must be a valid pointer.
int tc_report_json(const struct TcReport *report, char **out);

// Text rendering of a report; release the string with `tc_string_free`.
//
// # Safety
// `report` must be a live handle; `out` must be a valid pointer.
int tc_report_text(const struct TcReport *report, char **out);

// # Safety
// `report` must come from a `tc_run_*` call and not have been freed.
void tc_report_free(struct TcReport *report);

// # Safety
// `s` must come from this library (`tc_report_json`/`tc_report_text` or
// `tc_last_error_message`) and not have been freed.
void tc_string_free(char *s);

// The message of the last error on this thread, or NULL if the last call
// succeeded. The returned string is owned by the caller; release it with
// `tc_string_free`.
char *tc_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THETA_CODES_H */
