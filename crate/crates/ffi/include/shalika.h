#ifndef SHALIKA_H
#define SHALIKA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum ShalikaStatus {
  SHALIKA_STATUS_OK = 0,
  SHALIKA_STATUS_NULL_POINTER = 1,
  SHALIKA_STATUS_INVALID_UTF8 = 2,
  SHALIKA_STATUS_INVALID_INPUT = 3,
  SHALIKA_STATUS_PRECONDITION = 4,
  SHALIKA_STATUS_OUT_OF_RANGE = 5,
  SHALIKA_STATUS_PANIC = 6,
} ShalikaStatus;

typedef enum ShalikaVerdict {
  SHALIKA_VERDICT_EXISTS = 0,
  SHALIKA_VERDICT_NOT_EXISTS = 1,
  SHALIKA_VERDICT_NECESSARY_ONLY_NOT_GENERIC = 2,
} ShalikaVerdict;

typedef enum ShalikaOrbitClass {
  SHALIKA_ORBIT_CLASS_PSI_VANISHING = 0,
  SHALIKA_ORBIT_CLASS_MATCHING = 1,
  SHALIKA_ORBIT_CLASS_UNMATCHING = 2,
} ShalikaOrbitClass;

/**
 * A validated module file: standard module, `eta` and optional `psi_a`.
 */
typedef struct ShalikaModule ShalikaModule;

/**
 * A classified orbit table for one composition.
 */
typedef struct ShalikaOrbitTable ShalikaOrbitTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until
 * the next call into this library on the same thread.
 */
const char *shalika_last_error(void);

/**
 * Parses a module file. On success `*out` receives a new handle.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum ShalikaStatus shalika_module_from_json(const char *json, struct ShalikaModule **out);

/**
 * # Safety
 * `m` must be null or a handle from [`shalika_module_from_json`] not yet freed.
 */
void shalika_module_free(struct ShalikaModule *m);

/**
 * Whether the module's L-parameter is `eta`-symplectic.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum ShalikaStatus shalika_module_is_symplectic(const struct ShalikaModule *m, bool *out);

/**
 * Period verdict and the number of compatible matching orbits.
 *
 * # Safety
 * `m` must be a live handle; `verdict` and `compatible_orbits` valid pointers.
 */
enum ShalikaStatus shalika_module_period(const struct ShalikaModule *m,
                                         bool assume_generic,
                                         enum ShalikaVerdict *verdict,
                                         size_t *compatible_orbits);

/**
 * The full period report as JSON, in the command line's format.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum ShalikaStatus shalika_module_period_json(const struct ShalikaModule *m,
                                              bool assume_generic,
                                              char **out);

/**
 * The restriction sign for `psi_a` with `a = a_num / a_den`.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum ShalikaStatus shalika_module_epsilon(const struct ShalikaModule *m,
                                          int64_t a_num,
                                          int64_t a_den,
                                          int8_t *out);

/**
 * Builds the classified orbit table of a composition such as `"2+2+2"`.
 *
 * # Safety
 * `composition` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum ShalikaStatus shalika_orbit_table_new(const char *composition, struct ShalikaOrbitTable **out);

/**
 * Number of rows, or 0 for a null handle.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
size_t shalika_orbit_table_len(const struct ShalikaOrbitTable *t);

/**
 * One-line image of the representative in row `index`, e.g. `"3,4,1,2"`.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum ShalikaStatus shalika_orbit_table_omega(const struct ShalikaOrbitTable *t,
                                             size_t index,
                                             char **out);

/**
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum ShalikaStatus shalika_orbit_table_class(const struct ShalikaOrbitTable *t,
                                             size_t index,
                                             enum ShalikaOrbitClass *out);

/**
 * The table as TSV, identical to `shalika orbits COMP --classify --format tsv`.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum ShalikaStatus shalika_orbit_table_tsv(const struct ShalikaOrbitTable *t, char **out);

/**
 * # Safety
 * `t` must be null or a handle from [`shalika_orbit_table_new`] not yet freed.
 */
void shalika_orbit_table_free(struct ShalikaOrbitTable *t);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void shalika_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHALIKA_H */
