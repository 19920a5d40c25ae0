#ifndef HURWITZ_H
#define HURWITZ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HurwitzMethod {
  HURWITZ_METHOD_ORACLE = 0,
  HURWITZ_METHOD_CUTJOIN = 1,
  HURWITZ_METHOD_CLOSED = 2,
} HurwitzMethod;

typedef enum HurwitzStatus {
  HURWITZ_STATUS_OK = 0,
  HURWITZ_STATUS_NULL_POINTER = 1,
  HURWITZ_STATUS_INVALID_ARGUMENT = 2,
  HURWITZ_STATUS_PARSE = 3,
  /**
   * The input is larger than the chosen method supports.
   */
  HURWITZ_STATUS_SIZE = 4,
  /**
   * A verification, integrality or convergence check failed.
   */
  HURWITZ_STATUS_FAILED = 5,
  HURWITZ_STATUS_PANIC = 6,
} HurwitzStatus;

/**
 * A parsed partition.
 */
typedef struct HurwitzPartition HurwitzPartition;

/**
 * One computed Hurwitz number.
 */
typedef struct HurwitzRecord HurwitzRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null if none. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *hurwitz_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *hurwitz_version(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 *
 * `s` must be null or a pointer obtained from this library that has not
 * been freed yet.
 */
void hurwitz_string_free(char *s);

/**
 * Parses a partition literal such as `"3,2,2"` or `"(3,2,2)"`.
 *
 * # Safety
 *
 * `literal` must be a valid NUL-terminated string and `out` a valid
 * pointer to writable storage.
 */
enum HurwitzStatus hurwitz_partition_parse(const char *literal, struct HurwitzPartition **out);

/**
 * # Safety
 *
 * `p` must be null or a handle from [`hurwitz_partition_parse`] that has
 * not been freed yet.
 */
void hurwitz_partition_free(struct HurwitzPartition *p);

/**
 * Sum of the parts, or 0 for a null handle.
 *
 * # Safety
 *
 * `p` must be null or a live partition handle.
 */
uint32_t hurwitz_partition_degree(const struct HurwitzPartition *p);

/**
 * Number of parts, or 0 for a null handle.
 *
 * # Safety
 *
 * `p` must be null or a live partition handle.
 */
uint32_t hurwitz_partition_length(const struct HurwitzPartition *p);

/**
 * Canonical rendering such as `"(3,2,2)"`; free with [`hurwitz_string_free`].
 *
 * # Safety
 *
 * `p` must be a live partition handle and `out` valid for writing.
 */
enum HurwitzStatus hurwitz_partition_to_string(const struct HurwitzPartition *p, char **out);

/**
 * Computes `c_g(α)` and the Hurwitz number. `method` is a
 * [`HurwitzMethod`] value.
 *
 * # Safety
 *
 * `alpha` must be a live partition handle and `out` valid for writing.
 */
enum HurwitzStatus hurwitz_count(const struct HurwitzPartition *alpha,
                                 uint32_t genus,
                                 uint32_t method,
                                 struct HurwitzRecord **out);

/**
 * # Safety
 *
 * `rec` must be null or a handle from [`hurwitz_count`] that has not been
 * freed yet.
 */
void hurwitz_record_free(struct HurwitzRecord *rec);

/**
 * Factorization length `r`, or 0 for a null handle.
 *
 * # Safety
 *
 * `rec` must be null or a live record handle.
 */
uint32_t hurwitz_record_r(const struct HurwitzRecord *rec);

/**
 * The count `c_g(α)` as a decimal string; free with [`hurwitz_string_free`].
 *
 * # Safety
 *
 * `rec` must be a live record handle and `out` valid for writing.
 */
enum HurwitzStatus hurwitz_record_count(const struct HurwitzRecord *rec, char **out);

/**
 * The Hurwitz number as `"num/den"` (den omitted when 1); free with
 * [`hurwitz_string_free`].
 *
 * # Safety
 *
 * `rec` must be a live record handle and `out` valid for writing.
 */
enum HurwitzStatus hurwitz_record_mu(const struct HurwitzRecord *rec, char **out);

/**
 * Runs every identity check at truncation `(n, k, g)` and writes the JSON
 * report to `report` (free with [`hurwitz_string_free`]) and whether every
 * check passed to `all_passed`. A failing check is not an error: the
 * status is `Ok` and `all_passed` is false.
 *
 * # Safety
 *
 * `report` and `all_passed` must be valid for writing.
 */
enum HurwitzStatus hurwitz_verify(uint32_t n,
                                  uint32_t k,
                                  uint32_t g,
                                  char **report,
                                  bool *all_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HURWITZ_H */
