#ifndef RANKGEO_H
#define RANKGEO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RgMethod {
  RG_METHOD_SUBCODE = 0,
  RG_METHOD_SHORTEN = 1,
  RG_METHOD_SYSTEM = 2,
} RgMethod;

typedef enum RgSide {
  RG_SIDE_ROW = 0,
  RG_SIDE_COLUMN = 1,
} RgSide;

typedef enum RgStatus {
  RG_STATUS_OK = 0,
  RG_STATUS_NULL_POINTER = 1,
  RG_STATUS_INVALID_UTF8 = 2,
  RG_STATUS_PARSE = 3,
  RG_STATUS_INVALID_ARGUMENT = 4,
  RG_STATUS_DEGENERATE = 5,
  RG_STATUS_TOO_LARGE = 6,
  RG_STATUS_BUFFER_TOO_SMALL = 7,
  RG_STATUS_INTERNAL = 8,
} RgStatus;

/**
 * Opaque matrix rank-metric code.
 */
typedef struct RgCode RgCode;

/**
 * Enumeration caps; pass `NULL` wherever a `const RgGuards *` is accepted to use the defaults.
 */
typedef struct RgGuards {
  uint64_t max_vectors;
  uint64_t max_subspaces;
} RgGuards;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or `NULL`. Valid until the next call.
 */
const char *rg_last_error(void);

/**
 * Library version as a static string.
 */
const char *rg_version(void);

struct RgGuards rg_guards_default(void);

/**
 * Release a string returned by this library. `NULL` is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void rg_string_free(char *s);

/**
 * Release a code handle. `NULL` is ignored.
 *
 * # Safety
 * `code` must come from this library and not have been freed.
 */
void rg_code_free(struct RgCode *code);

/**
 * Parse a code or tensor document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum RgStatus rg_code_from_json(const char *json, struct RgCode **out);

/**
 * The built-in [3x3, 4, 2] binary code.
 *
 * # Safety
 * `out` must be writable.
 */
enum RgStatus rg_code_toy(struct RgCode **out);

/**
 * The [n x n, n, n] code of multiplication matrices of `GF(q^n)` over `GF(q)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum RgStatus rg_code_spread(uint32_t q, size_t n, struct RgCode **out);

/**
 * Field order and shape. Any out-pointer may be `NULL`.
 *
 * # Safety
 * `code` must be a live handle; non-NULL out-pointers must be writable.
 */
enum RgStatus rg_code_shape(const struct RgCode *code,
                            uint32_t *q,
                            size_t *m,
                            size_t *n,
                            size_t *k);

/**
 * Serialize as a code document.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum RgStatus rg_code_to_json(const struct RgCode *code, char **out);

/**
 * Rank distribution `A_0, ..., A_min(m,n)` into `buf`.
 *
 * `*len` receives the number of entries even when `cap` is too small.
 *
 * # Safety
 * `code` must be a live handle; `buf` must hold `cap` entries; `len` must be writable.
 */
enum RgStatus rg_rank_distribution(const struct RgCode *code,
                                   const struct RgGuards *guards,
                                   uint64_t *buf,
                                   size_t cap,
                                   size_t *len);

/**
 * Minimum rank distance; 0 for the zero code.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum RgStatus rg_min_distance(const struct RgCode *code,
                              const struct RgGuards *guards,
                              size_t *out);

/**
 * Generalized weights `d_1, ..., d_k` on one side into `buf`.
 *
 * # Safety
 * As for [`rg_rank_distribution`].
 */
enum RgStatus rg_generalized_weights(const struct RgCode *code,
                                     enum RgSide side,
                                     enum RgMethod method,
                                     const struct RgGuards *guards,
                                     size_t *buf,
                                     size_t cap,
                                     size_t *len);

/**
 * Run a verifier suite (`NULL` means `"all"`). `*passed` tells whether every report
 * passed; when `reports` is non-NULL it receives the reports as JSON lines.
 *
 * # Safety
 * `code` must be a live handle; `suite` is NULL or NUL-terminated; `passed` must be
 * writable; `reports` is NULL or writable.
 */
enum RgStatus rg_verify(const struct RgCode *code,
                        const char *suite,
                        const struct RgGuards *guards,
                        bool *passed,
                        char **reports);

/**
 * Extended additive Hamming code with its weight distribution and generalized weights, as JSON.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum RgStatus rg_extend_json(const struct RgCode *code,
                             enum RgSide side,
                             const struct RgGuards *guards,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RANKGEO_H */
