#ifndef TORIC_CODES_H
#define TORIC_CODES_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every call.
typedef enum TcStatus {
  TC_STATUS_OK = 0,
  // The computation ran but a checked property does not hold (e.g. not certified).
  TC_STATUS_PROPERTY_VIOLATED = 1,
  TC_STATUS_PARSE_ERROR = 2,
  TC_STATUS_BUDGET_EXCEEDED = 3,
  TC_STATUS_INVALID_ARGUMENT = 4,
  TC_STATUS_INTERNAL = 5,
} TcStatus;

// A finite field GF(p^m).
typedef struct TcField TcField;

// A validated problem file.
typedef struct TcProblem TcProblem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until the
// next call on the same thread; do not free.
const char *tc_last_error(void);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a pointer obtained from this library and not yet freed.
void tc_string_free(char *s);

// Create GF(p^m) with the default modulus.
//
// # Safety
// `out` must be valid for writes.
enum TcStatus tc_field_new(uint32_t p, uint32_t m, struct TcField **out);

// # Safety
// `f` must be null or a handle from [`tc_field_new`] not yet freed.
void tc_field_free(struct TcField *f);

// Number of elements, or 0 for a null handle.
//
// # Safety
// `f` must be null or a live field handle.
uint32_t tc_field_order(const struct TcField *f);

// `*out = a + b`.
//
// # Safety
// `f` must be a live field handle and `out` valid for writes.
enum TcStatus tc_field_add(const struct TcField *f, uint32_t a, uint32_t b, uint32_t *out);

// `*out = a * b`.
//
// # Safety
// `f` must be a live field handle and `out` valid for writes.
enum TcStatus tc_field_mul(const struct TcField *f, uint32_t a, uint32_t b, uint32_t *out);

// `*out = a / b`; `InvalidArgument` when `b` is zero.
//
// # Safety
// `f` must be a live field handle and `out` valid for writes.
enum TcStatus tc_field_div(const struct TcField *f, uint32_t a, uint32_t b, uint32_t *out);

// Parse a problem file (JSON).
//
// # Safety
// `json` must be a NUL-terminated string and `out` valid for writes.
enum TcStatus tc_problem_from_json(const char *json, struct TcProblem **out);

// # Safety
// `p` must be null or a handle from [`tc_problem_from_json`] not yet freed.
void tc_problem_free(struct TcProblem *p);

// Solve, certify and check Euler–Jacobi; `Ok` iff certified. The JSON report
// is written to `*report` even when the status is not `Ok`.
//
// # Safety
// `p` must be a live problem handle and `report` valid for writes.
enum TcStatus tc_solve(const struct TcProblem *p, char **report);

// Code parameters, kernel, exact distance and bounds.
//
// # Safety
// `p` must be a live problem handle and `report` valid for writes.
enum TcStatus tc_code(const struct TcProblem *p, char **report);

// Lower bounds and genericity hypotheses without computing `d`.
//
// # Safety
// `p` must be a live problem handle and `report` valid for writes.
enum TcStatus tc_bounds(const struct TcProblem *p, char **report);

// Random systems on the problem's polytopes.
//
// # Safety
// `p` must be a live problem handle and `report` valid for writes.
enum TcStatus tc_random_search(const struct TcProblem *p,
                               uint64_t trials,
                               uint64_t seed,
                               char **report);

// Check the built-in reference examples.
//
// # Safety
// `report` must be valid for writes.
enum TcStatus tc_paper_examples(char **report);

// Mixed volume of polytopes given as a JSON array of vertex lists,
// e.g. `[[[0,0],[1,0],[0,1]], [[0,0],[2,0],[0,2]]]`.
//
// # Safety
// `json` must be a NUL-terminated string and `out` valid for writes.
enum TcStatus tc_mixed_volume(const char *json, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_CODES_H */
