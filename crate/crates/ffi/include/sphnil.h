#ifndef SPHNIL_H
#define SPHNIL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum SphnilStatus {
  SPHNIL_STATUS_OK = 0,
  SPHNIL_STATUS_NULL_POINTER = 1,
  SPHNIL_STATUS_INVALID_UTF8 = 2,
  SPHNIL_STATUS_PARSE = 3,
  SPHNIL_STATUS_CATALOG = 4,
  SPHNIL_STATUS_NOT_FOUND = 5,
  SPHNIL_STATUS_NOT_ABELIAN = 6,
  /**
   * the report was produced but contains a FAIL section
   */
  SPHNIL_STATUS_VERIFICATION_FAILED = 7,
  SPHNIL_STATUS_PANIC = 8,
} SphnilStatus;

/**
 * Opaque catalog handle.
 */
typedef struct SphnilCatalog SphnilCatalog;

/**
 * Opaque root system handle.
 */
typedef struct SphnilRootSystem SphnilRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never free the result.
 */
const char *sphnil_status_message(enum SphnilStatus status);

/**
 * Load the catalog compiled into the library.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum SphnilStatus sphnil_catalog_builtin(struct SphnilCatalog **out);

/**
 * Load and validate a catalog file.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum SphnilStatus sphnil_catalog_load(const char *path, struct SphnilCatalog **out);

/**
 * Number of case records; 0 for a null handle.
 *
 * # Safety
 * `cat` must be null or a live handle from this library.
 */
uintptr_t sphnil_catalog_case_count(const struct SphnilCatalog *cat);

/**
 * Release a catalog handle. Null is ignored.
 *
 * # Safety
 * `cat` must be null or a handle not yet freed.
 */
void sphnil_catalog_free(struct SphnilCatalog *cat);

/**
 * Run one case and return its report (text, or JSON when `structured`
 * is nonzero) in `*report`. Returns `VerificationFailed` when a section
 * failed; the report is still written.
 *
 * # Safety
 * `cat` must be a live handle, `case_id` NUL-terminated, and `report`
 * valid for writes. Free the report with [`sphnil_string_free`].
 */
enum SphnilStatus sphnil_run_case(const struct SphnilCatalog *cat,
                                  const char *case_id,
                                  int32_t structured,
                                  char **report);

/**
 * Build the root system of a simple type such as `"E7"`.
 *
 * # Safety
 * `ty` must be NUL-terminated; `out` valid for writes.
 */
enum SphnilStatus sphnil_root_system_new(const char *ty, struct SphnilRootSystem **out);

/**
 * Rank; 0 for a null handle.
 *
 * # Safety
 * `rs` must be null or a live handle.
 */
uintptr_t sphnil_root_system_rank(const struct SphnilRootSystem *rs);

/**
 * Number of positive roots; 0 for a null handle.
 *
 * # Safety
 * `rs` must be null or a live handle.
 */
uintptr_t sphnil_root_system_num_positive(const struct SphnilRootSystem *rs);

/**
 * Exponent m of the central character for simple root `root` (1-based).
 *
 * # Safety
 * `rs` must be a live handle and `m` valid for writes.
 */
enum SphnilStatus sphnil_hermitian_exponent(const struct SphnilRootSystem *rs,
                                            uintptr_t root,
                                            int64_t *m);

/**
 * Release a root system handle. Null is ignored.
 *
 * # Safety
 * `rs` must be null or a handle not yet freed.
 */
void sphnil_root_system_free(struct SphnilRootSystem *rs);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library (for example
 * through [`sphnil_run_case`]) that has not been freed yet. Passing any
 * other pointer, or freeing twice, is undefined behaviour. Strings from
 * [`sphnil_status_message`] are static and must not be passed here.
 */
void sphnil_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SPHNIL_H */
