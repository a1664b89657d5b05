#ifndef ZX_H
#define ZX_H

/* Generated with cbindgen:0.29.4 */

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status of a call.
typedef enum ZxStatus {
  ZX_STATUS_OK = 0,
  ZX_STATUS_NULL_POINTER = 1,
  ZX_STATUS_DOMAIN = 2,
  ZX_STATUS_OUT_OF_RANGE = 3,
  ZX_STATUS_PARSE = 4,
  ZX_STATUS_CONFIG = 5,
  ZX_STATUS_INTEGRITY = 6,
  ZX_STATUS_IO = 7,
  ZX_STATUS_INVALID_UTF8 = 8,
  ZX_STATUS_PANIC = 9,
} ZxStatus;

// Λ(n) for `0 ≤ n ≤ limit`.
typedef struct ZxMangoldtTable ZxMangoldtTable;

// Zeros ordered by ordinate, complete to a height.
typedef struct ZxZeroTable ZxZeroTable;

// One estimate of Λ(t). Bounds that do not apply are NaN;
// `bound_satisfied` is 1, 0, or −1 when no bound applies.
typedef struct ZxEstimate {
  double t;
  double height;
  double x;
  double kernel_sum;
  double estimate;
  // Λ(t), zero for non-integer t.
  double target;
  double abs_error;
  double tail_bound;
  double theorem_bound;
  double total_bound;
  size_t zeros_used;
  int32_t bound_satisfied;
} ZxEstimate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the calling thread's last error message into `buf` (NUL-terminated,
// truncated to `len`). Returns the full message length plus one, so a caller
// can size a buffer by passing `len = 0`.
//
// # Safety
// `buf` must be null or point to `len` writable bytes.
size_t zx_last_error_message(char *buf, size_t len);

// Library version, a static NUL-terminated string.
const char *zx_version(void);

// Sieves Λ up to `limit`.
//
// # Safety
// `out` must be a valid pointer to write the handle to.
enum ZxStatus zx_mangoldt_sieve(size_t limit, struct ZxMangoldtTable **out);

// Λ(n) from a sieved table.
//
// # Safety
// `table` must come from [`zx_mangoldt_sieve`]; `out` must be writable.
enum ZxStatus zx_mangoldt_table_get(const struct ZxMangoldtTable *table, size_t n, double *out);

// Sieve limit of the table, 0 for null.
//
// # Safety
// `table` must be null or come from [`zx_mangoldt_sieve`].
size_t zx_mangoldt_table_limit(const struct ZxMangoldtTable *table);

// # Safety
// `table` must be null or an unfreed handle from [`zx_mangoldt_sieve`].
void zx_mangoldt_table_free(struct ZxMangoldtTable *table);

// Λ(n) by factorization, no table needed.
//
// # Safety
// `out` must be writable.
enum ZxStatus zx_mangoldt(uint64_t n, double *out);

// Parses a zero table from text in the zero-table format.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be writable.
enum ZxStatus zx_zeros_parse(const char *src, struct ZxZeroTable **out);

// Reads a zero table file.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be writable.
enum ZxStatus zx_zeros_load(const char *path, struct ZxZeroTable **out);

// Finds every zero with ordinate up to `height` (10 ≤ height ≤ 1e5).
//
// # Safety
// `out` must be writable.
enum ZxStatus zx_zeros_compute(double height, struct ZxZeroTable **out);

// Number of zeros, 0 for null.
//
// # Safety
// `table` must be null or a live zero-table handle.
size_t zx_zeros_len(const struct ZxZeroTable *table);

// Height to which the table is complete, NaN for null.
//
// # Safety
// `table` must be null or a live zero-table handle.
double zx_zeros_height(const struct ZxZeroTable *table);

// Ordinate `γ` and offset `μ = ½ − β` of zero `index` (from 0).
//
// # Safety
// `table` must be a live handle; `gamma` and `mu` must be writable.
enum ZxStatus zx_zeros_get(const struct ZxZeroTable *table,
                           size_t index,
                           double *gamma,
                           double *mu);

// # Safety
// `table` must be null or an unfreed zero-table handle.
void zx_zeros_free(struct ZxZeroTable *table);

// Estimates Λ(t) from the zeros below `height` with the coupled kernel.
//
// # Safety
// `zeros` must be a live handle; `out` must be writable.
enum ZxStatus zx_estimate(double t,
                          double height,
                          const struct ZxZeroTable *zeros,
                          struct ZxEstimate *out);

// `Φ₁(t)` with prime-power cutoff `cutoff`.
//
// # Safety
// `primes` must be a live handle sieved to at least `cutoff`; `out` must be
// writable.
enum ZxStatus zx_phi1(double t, size_t cutoff, const struct ZxMangoldtTable *primes, double *out);

// `Φ₂(t)` with cutoff `cutoff` and `√t` coefficient `c_spec`.
//
// # Safety
// As [`zx_phi1`].
enum ZxStatus zx_phi2(double t,
                      size_t cutoff,
                      double c_spec,
                      const struct ZxMangoldtTable *primes,
                      double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZX_H */
