#ifndef CCDEC_H
#define CCDEC_H

#include <stddef.h>
#include <stdint.h>
#include <stdbool.h>

typedef enum CcdecStatus {
  CCDEC_STATUS_OK = 0,
  CCDEC_STATUS_NULL_POINTER = 1,
  // Malformed input: bad sizes, unparsable text, out-of-range index.
  CCDEC_STATUS_INVALID_INPUT = 2,
  // The matrix violates C1, C2 or C3.
  CCDEC_STATUS_AXIOM = 3,
  CCDEC_STATUS_NOT_THICK = 4,
  CCDEC_STATUS_NOT_A_PARABOLIC = 5,
  // Any other library error.
  CCDEC_STATUS_FAILED = 6,
  // A Rust panic was caught at the boundary.
  CCDEC_STATUS_PANIC = 7,
} CcdecStatus;

// A validated coherent configuration.
typedef struct CcdecConfiguration CcdecConfiguration;

// The maximal tensor decomposition of a configuration.
typedef struct CcdecDecomposition CcdecDecomposition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null.
//
// The pointer stays valid until the next `ccdec_*` call on this thread.
const char *ccdec_last_error(void);

// Builds and validates a configuration from `degree * degree` row-major colors.
//
// # Safety
// `cells` must point to `degree * degree` readable values and `out` must be writable.
enum CcdecStatus ccdec_configuration_new(uintptr_t degree,
                                         const uint32_t *cells,
                                         bool fast,
                                         struct CcdecConfiguration **out);

// Parses and validates a configuration in the text matrix format.
//
// # Safety
// `text` must be a NUL-terminated string and `out` must be writable.
enum CcdecStatus ccdec_configuration_parse(const char *text,
                                           bool fast,
                                           struct CcdecConfiguration **out);

// # Safety
// `cc` must be null or a handle from this library not yet freed.
void ccdec_configuration_free(struct CcdecConfiguration *cc);

// Degree of `cc`, or 0 for a null handle.
//
// # Safety
// `cc` must be null or a live handle.
uintptr_t ccdec_configuration_degree(const struct CcdecConfiguration *cc);

// Rank of `cc`, or 0 for a null handle.
//
// # Safety
// `cc` must be null or a live handle.
uintptr_t ccdec_configuration_rank(const struct CcdecConfiguration *cc);

// # Safety
// `cc` must be null or a live handle.
bool ccdec_configuration_is_thick(const struct CcdecConfiguration *cc);

// Copies the `degree * degree` row-major color matrix into `buf`.
//
// # Safety
// `cc` must be a live handle and `buf` must have room for `len` values.
enum CcdecStatus ccdec_configuration_cells(const struct CcdecConfiguration *cc,
                                           uint32_t *buf,
                                           uintptr_t len);

// Tensor product of `count` configurations.
//
// # Safety
// `parts` must point to `count` live handles and `out` must be writable.
enum CcdecStatus ccdec_tensor(const struct CcdecConfiguration *const *parts,
                              uintptr_t count,
                              struct CcdecConfiguration **out);

// Computes the maximal tensor decomposition of a thick configuration.
//
// A nonzero `seed` randomizes the merge order; the result is the same.
//
// # Safety
// `cc` must be a live handle and `out` must be writable.
enum CcdecStatus ccdec_decompose(const struct CcdecConfiguration *cc,
                                 uint64_t seed,
                                 struct CcdecDecomposition **out);

// # Safety
// `d` must be null or a handle from this library not yet freed.
void ccdec_decomposition_free(struct CcdecDecomposition *d);

// Number of factors, or 0 for a null handle.
//
// # Safety
// `d` must be null or a live handle.
uintptr_t ccdec_decomposition_factor_count(const struct CcdecDecomposition *d);

// Copies factor `index` into a new configuration handle.
//
// # Safety
// `d` must be a live handle and `out` must be writable.
enum CcdecStatus ccdec_decomposition_factor(const struct CcdecDecomposition *d,
                                            uintptr_t index,
                                            struct CcdecConfiguration **out);

// Writes, for each source point, its index in the tensor of the factors.
//
// # Safety
// `d` must be a live handle and `buf` must have room for `len` values.
enum CcdecStatus ccdec_decomposition_product_map(const struct CcdecDecomposition *d,
                                                 uintptr_t *buf,
                                                 uintptr_t len);

// Number of recursive calls made while decomposing.
//
// # Safety
// `d` must be null or a live handle.
uintptr_t ccdec_decomposition_recursion_calls(const struct CcdecDecomposition *d);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CCDEC_H */
