#ifndef NILPOTENT_RREF_H
#define NILPOTENT_RREF_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum NrStatus {
  NR_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  NR_STATUS_NULL_ARGUMENT = 1,
  /**
   * Input text was not valid UTF-8.
   */
  NR_STATUS_INVALID_UTF8 = 2,
  /**
   * Matrix or script text was malformed, or named an invalid field.
   */
  NR_STATUS_PARSE = 3,
  /**
   * Shapes or fields of the operands do not fit together.
   */
  NR_STATUS_DIMENSION_MISMATCH = 4,
  /**
   * The operation needs a square matrix.
   */
  NR_STATUS_NOT_SQUARE = 5,
  /**
   * A witness was requested for a nonsingular matrix.
   */
  NR_STATUS_NON_SINGULAR = 6,
  /**
   * A row index or kernel vector index is out of range.
   */
  NR_STATUS_OUT_OF_RANGE = 7,
  /**
   * Any other domain error reported by the library.
   */
  NR_STATUS_DOMAIN = 8,
  /**
   * The library panicked; this is a bug.
   */
  NR_STATUS_INTERNAL = 9,
} NrStatus;

/**
 * Opaque witness certificate.
 */
typedef struct NrCertificate NrCertificate;

/**
 * Opaque matrix over Q or GF(p).
 */
typedef struct NrMatrix NrMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *nr_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void nr_string_free(char *s);

/**
 * Parses one matrix in the text format (`Q` or `GF p`, then `rows cols`,
 * then the rows).
 */
enum NrStatus nr_matrix_parse(const char *src, struct NrMatrix **out);

/**
 * Releases a matrix. Null is ignored.
 */
void nr_matrix_free(struct NrMatrix *m);

/**
 * Row count, or 0 for null.
 */
size_t nr_matrix_rows(const struct NrMatrix *m);

/**
 * Column count, or 0 for null.
 */
size_t nr_matrix_cols(const struct NrMatrix *m);

/**
 * Writes the matrix in the text format. Free with [`nr_string_free`].
 */
enum NrStatus nr_matrix_to_string(const struct NrMatrix *m, char **out);

/**
 * Reduced row echelon form and rank. `out_rank` may be null.
 */
enum NrStatus nr_matrix_rref(const struct NrMatrix *m, struct NrMatrix **out, size_t *out_rank);

/**
 * Dimension of the null space.
 */
enum NrStatus nr_matrix_nullity(const struct NrMatrix *m, size_t *out);

/**
 * The `k`-th (0-based) special solution of the null space, as a column.
 */
enum NrStatus nr_matrix_kernel_vector(const struct NrMatrix *m, size_t k, struct NrMatrix **out);

/**
 * Nilpotent index of a square matrix; writes 0 when it is not nilpotent.
 */
enum NrStatus nr_matrix_nilpotent_index(const struct NrMatrix *m, size_t *out);

/**
 * Whether two matrices of the same shape and field are row equivalent.
 */
enum NrStatus nr_matrix_row_equivalent(const struct NrMatrix *a,
                                       const struct NrMatrix *b,
                                       bool *out);

/**
 * Applies a row script (`swap i j`, `scale i c`, `addmul i c j`, one per
 * line, rows 1-based) and returns the result as a new matrix.
 */
enum NrStatus nr_matrix_apply_script(const struct NrMatrix *m,
                                     const char *script,
                                     struct NrMatrix **out);

/**
 * Builds and verifies a nilpotent matrix row equivalent to a singular
 * square matrix.
 */
enum NrStatus nr_witness(const struct NrMatrix *m, struct NrCertificate **out);

/**
 * Releases a certificate. Null is ignored.
 */
void nr_certificate_free(struct NrCertificate *c);

/**
 * Nilpotent index recorded in the certificate, or 0 for null.
 */
size_t nr_certificate_index(const struct NrCertificate *c);

/**
 * Nullity recorded in the certificate, or 0 for null.
 */
size_t nr_certificate_nullity(const struct NrCertificate *c);

/**
 * A copy of the nilpotent matrix.
 */
enum NrStatus nr_certificate_nilpotent(const struct NrCertificate *c, struct NrMatrix **out);

/**
 * The row script taking the input to the nilpotent matrix.
 */
enum NrStatus nr_certificate_script(const struct NrCertificate *c, char **out);

/**
 * The full certificate report, as printed by `nilrref witness`.
 */
enum NrStatus nr_certificate_report(const struct NrCertificate *c, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NILPOTENT_RREF_H */
