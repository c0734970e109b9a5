#ifndef TWISTED_RB_H
#define TWISTED_RB_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TrbStatus {
  TRB_STATUS_OK = 0,
  TRB_STATUS_NULL_POINTER = 1,
  TRB_STATUS_INVALID_UTF8 = 2,
  TRB_STATUS_PARSE_ERROR = 3,
  TRB_STATUS_MISSING_SECTION = 4,
  TRB_STATUS_DIMENSION_MISMATCH = 5,
  TRB_STATUS_INVALID_STRUCTURE = 6,
  TRB_STATUS_NOT_TWISTED_RB = 7,
  TRB_STATUS_MATH_ERROR = 8,
  TRB_STATUS_BUFFER_TOO_SMALL = 9,
  TRB_STATUS_PANIC = 10,
} TrbStatus;

/**
 * A parsed and validated instance document.
 */
typedef struct TrbInstance TrbInstance;

/**
 * Exit code and text of one command-line invocation.
 */
typedef struct TrbReport TrbReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty if none. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *trb_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *trb_version(void);

/**
 * Parses and validates an instance document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TrbStatus trb_instance_from_json(const char *json, struct TrbInstance **out);

/**
 * # Safety
 * `inst` must come from [`trb_instance_from_json`] and not be used afterwards.
 */
void trb_instance_free(struct TrbInstance *inst);

/**
 * Dimensions of the Lie algebra and the module of the instance setup.
 *
 * # Safety
 * `inst` must be a live handle; `lie_dim` and `module_dim` writable.
 */
enum TrbStatus trb_instance_dims(const struct TrbInstance *inst,
                                 size_t *lie_dim,
                                 size_t *module_dim);

/**
 * Whether `operator_T` satisfies the twisted Rota-Baxter identity.
 *
 * # Safety
 * `inst` must be a live handle; `holds` writable.
 */
enum TrbStatus trb_check_trb(const struct TrbInstance *inst, bool *holds);

/**
 * Whether `operator_T` is a Maurer-Cartan element.
 *
 * # Safety
 * `inst` must be a live handle; `holds` writable.
 */
enum TrbStatus trb_check_mc(const struct TrbInstance *inst, bool *holds);

/**
 * `dim H^n(g, M)` for `n = 0..=nmax`, written to `out[0..=nmax]`.
 *
 * # Safety
 * `inst` must be a live handle and `out` must have room for `len` entries.
 */
enum TrbStatus trb_ce_cohomology_dims(const struct TrbInstance *inst,
                                      size_t nmax,
                                      size_t *out,
                                      size_t len);

/**
 * `dim H^n_T` for `n = 0..=nmax`; fails with `NotTwistedRb` when `operator_T` is not.
 *
 * # Safety
 * `inst` must be a live handle and `out` must have room for `len` entries.
 */
enum TrbStatus trb_cohomology_of_t_dims(const struct TrbInstance *inst,
                                        size_t nmax,
                                        size_t *out,
                                        size_t len);

/**
 * Rows `0 <= m <= n <= nmax` of the Witt-algebra Reynolds table.
 *
 * # Safety
 * `rows` and `all_pass` must be writable.
 */
enum TrbStatus trb_witt_report(int64_t nmax, size_t *rows, bool *all_pass);

/**
 * Runs the command-line tool in process. `argv[0]` is the program name.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings; `out` must be writable.
 */
enum TrbStatus trb_run(const char *const *argv, size_t argc, struct TrbReport **out);

/**
 * Exit code: 0 pass, 1 failed check, 2 invalid input; -1 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
int32_t trb_report_exit_code(const struct TrbReport *report);

/**
 * Report text; owned by the handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
const char *trb_report_stdout(const struct TrbReport *report);

/**
 * Diagnostics text; owned by the handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
const char *trb_report_stderr(const struct TrbReport *report);

/**
 * # Safety
 * `report` must come from [`trb_run`] and not be used afterwards.
 */
void trb_report_free(struct TrbReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWISTED_RB_H */
