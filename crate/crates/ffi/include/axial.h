#ifndef AXIAL_H
#define AXIAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum AxialStatus {
  AXIAL_STATUS_OK = 0,
  AXIAL_STATUS_NULL_POINTER = 1,
  AXIAL_STATUS_INVALID_UTF8 = 2,
  AXIAL_STATUS_PARSE_ERROR = 3,
  AXIAL_STATUS_UNKNOWN_NAME = 4,
  AXIAL_STATUS_INVALID_ARGUMENT = 5,
  AXIAL_STATUS_MATH_FAILURE = 6,
  AXIAL_STATUS_PANIC = 7,
} AxialStatus;

/**
 * Opaque algebra with its generators and the value of eta it was built at.
 */
typedef struct AxialAlgebra AxialAlgebra;

/**
 * Table columns of an algebra.
 */
typedef struct AxialInvariants {
  size_t enclosure_size;
  size_t adim;
  size_t vdim;
} AxialInvariants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build a catalog algebra. `eta` is `"generic"` or an exact scalar;
 * `characteristic` is 0 or a prime.
 *
 * # Safety
 * `name` and `eta` must be NUL-terminated strings; `out` must be writable.
 */
enum AxialStatus axial_catalog_build(const char *name,
                                     const char *eta,
                                     uint64_t characteristic,
                                     struct AxialAlgebra **out);

/**
 * Parse an algebra in the text format written by [`axial_algebra_to_text`].
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum AxialStatus axial_algebra_parse(const char *text, struct AxialAlgebra **out);

/**
 * Release an algebra. Null is ignored.
 *
 * # Safety
 * `alg` must come from this library and not be used afterwards.
 */
void axial_algebra_free(struct AxialAlgebra *alg);

/**
 * Dimension of the algebra.
 *
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
enum AxialStatus axial_algebra_dim(const struct AxialAlgebra *alg, size_t *out);

/**
 * Text form of the algebra; release with [`axial_string_free`].
 *
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
enum AxialStatus axial_algebra_to_text(const struct AxialAlgebra *alg, char **out);

/**
 * Enclosure size, axial dimension and dimension under `rule`.
 *
 * # Safety
 * `alg` must be a live handle, `rule` a NUL-terminated string and `out`
 * writable.
 */
enum AxialStatus axial_invariants(const struct AxialAlgebra *alg,
                                  const char *rule,
                                  struct AxialInvariants *out);

/**
 * Writes 1 to `all_axes` when every generator is an axis for `rule`, else 0.
 *
 * # Safety
 * `alg` must be a live handle, `rule` a NUL-terminated string and
 * `all_axes` writable.
 */
enum AxialStatus axial_verify_axes(const struct AxialAlgebra *alg, const char *rule, int *all_axes);

/**
 * Quotient by the ideal generated by `;`-separated vectors such as
 * `"s_0; qh - ah_0"`.
 *
 * # Safety
 * `alg` must be a live handle, `vectors` a NUL-terminated string and `out`
 * writable.
 */
enum AxialStatus axial_quotient(const struct AxialAlgebra *alg,
                                const char *vectors,
                                struct AxialAlgebra **out);

/**
 * Run the command line with `argc` arguments (without the program name).
 * The report goes to `report` (release with [`axial_string_free`]) and the
 * command's exit code to `exit_code`.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings; `report` and
 * `exit_code` must be writable.
 */
enum AxialStatus axial_run(const char *const *argv, size_t argc, char **report, int *exit_code);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void axial_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *axial_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AXIAL_H */
