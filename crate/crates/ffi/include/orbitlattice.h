#ifndef ORBITLATTICE_H
#define ORBITLATTICE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OlStatus {
  OL_STATUS_OK = 0,
  OL_STATUS_NULL_POINTER = 1,
  OL_STATUS_INVALID_UTF8 = 2,
  OL_STATUS_PARSE = 3,
  OL_STATUS_DOMAIN = 4,
  OL_STATUS_OUT_OF_RANGE = 5,
  OL_STATUS_PANIC = 6,
} OlStatus;

/**
 * An involution in canonical cycle form.
 */
typedef struct OlInvolution OlInvolution;

/**
 * An upper-triangular rank matrix.
 */
typedef struct OlRankMatrix OlRankMatrix;

/**
 * The decomposition of an intersection of two closures.
 */
typedef struct OlReport OlReport;

/**
 * A two-column standard tableau.
 */
typedef struct OlTableau OlTableau;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failed call on this thread, or NULL. The
 * returned string is owned by the caller.
 */
char *ol_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void ol_string_free(char *s);

/**
 * Parses `"(1,3)(2,5)"` or `"()"`. An `n` of 0 takes the largest entry.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum OlStatus ol_involution_parse(const char *text, size_t n, struct OlInvolution **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library, not yet freed.
 */
void ol_involution_free(struct OlInvolution *p);

/**
 * Ambient size `n`, or 0 for a NULL handle.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t ol_involution_size(const struct OlInvolution *p);

/**
 * Number of 2-cycles, or 0 for a NULL handle.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t ol_involution_rank(const struct OlInvolution *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_involution_to_string(const struct OlInvolution *p, char **out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_involution_orbit_dim(const struct OlInvolution *p, size_t *out);

/**
 * Parses `"1,3,5|2,4"` (first column, then second).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum OlStatus ol_tableau_parse(const char *text, struct OlTableau **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library, not yet freed.
 */
void ol_tableau_free(struct OlTableau *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_tableau_to_string(const struct OlTableau *p, char **out);

/**
 * The involution attached to a tableau.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_tableau_sigma(const struct OlTableau *p, struct OlInvolution **out);

/**
 * The tableau whose involution is `sigma`; fails with `OL_STATUS_DOMAIN`
 * when there is none.
 *
 * # Safety
 * `sigma` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_tableau_of_sigma(const struct OlInvolution *sigma, struct OlTableau **out);

/**
 * # Safety
 * `sigma` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_rank_matrix(const struct OlInvolution *sigma, struct OlRankMatrix **out);

/**
 * Parses rows separated by `;` and entries by `,`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum OlStatus ol_rank_matrix_parse(const char *text, struct OlRankMatrix **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library, not yet freed.
 */
void ol_rank_matrix_free(struct OlRankMatrix *p);

/**
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t ol_rank_matrix_size(const struct OlRankMatrix *p);

/**
 * Entry `(i, j)`, 1-based.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_rank_matrix_get(const struct OlRankMatrix *p, size_t i, size_t j, uint32_t *out);

/**
 * Whether the matrix is the rank matrix of some involution.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_rank_matrix_validate(const struct OlRankMatrix *p, bool *out);

/**
 * Entrywise `a <= b`.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum OlStatus ol_rank_matrix_leq(const struct OlRankMatrix *a,
                                 const struct OlRankMatrix *b,
                                 bool *out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum OlStatus ol_intersect(const struct OlInvolution *a,
                           const struct OlInvolution *b,
                           struct OlReport **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum OlStatus ol_intersect_tableaux(const struct OlTableau *a,
                                    const struct OlTableau *b,
                                    struct OlReport **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library, not yet freed.
 */
void ol_report_free(struct OlReport *p);

/**
 * # Safety
 * `p` must be NULL or a live handle.
 */
bool ol_report_irreducible(const struct OlReport *p);

/**
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t ol_report_component_count(const struct OlReport *p);

/**
 * Smallest codimension over the components.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
size_t ol_report_codim(const struct OlReport *p);

/**
 * The involution whose orbit is dense in component `index`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_report_component(const struct OlReport *p,
                                  size_t index,
                                  struct OlInvolution **out);

/**
 * Dimension of component `index`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_report_component_dim(const struct OlReport *p, size_t index, size_t *out);

/**
 * The report as the JSON document the command line prints.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum OlStatus ol_report_to_json(const struct OlReport *p, char **out);

/**
 * Library version, statically allocated.
 */
const char *ol_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBITLATTICE_H */
