/* C interface to the veron library: exact rational linear algebra for
 * nilpotent orbit geometry, sl(2) weight calculus, matrix Lie algebra
 * structure, and vector bundles on the projective line.
 *
 * Conventions:
 *   - Handles are opaque; every *_parse/*_free pair owns its object.
 *   - Operations return a report handle, or NULL on failure; the failing
 *     thread's status and message are available from veron_last_status()
 *     and veron_last_error() until the next call on that thread.
 *   - Strings returned by the library are heap copies; release them with
 *     veron_string_free.
 *
 * Matrix file format (JSON):
 *   {"rows": r, "cols": c, "entries": [["p/q" | int, ...], ...]}
 * Laurent (transition) matrix file format, square:
 *   {"size": r, "entries": [[[ [exp, "p/q" | int], ... ], ...], ...]}
 */

#ifndef VERON_H
#define VERON_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum veron_status {
  VERON_OK = 0,
  VERON_ERR_PARSE = 1,
  VERON_ERR_BAD_ARGUMENT = 2,
  VERON_ERR_AMBIENT_MISMATCH = 3,
  VERON_ERR_LENGTH_MISMATCH = 4,
  VERON_ERR_NOT_COMPLEMENTARY = 5,
  VERON_ERR_NOT_NILPOTENT = 6,
  VERON_ERR_ZERO_VECTOR = 7,
  VERON_ERR_ZERO_MATRIX = 8,
  VERON_ERR_DEGREE_MISMATCH = 9,
  VERON_ERR_NOT_SL2 = 10,
  VERON_ERR_NON_INTEGER_SPECTRUM = 11,
  VERON_ERR_NOT_DIAGONALIZABLE = 12,
  VERON_ERR_NOT_IN_ALGEBRA = 13,
  VERON_ERR_IRRATIONAL_SPECTRUM = 14,
  VERON_ERR_NOT_INVERTIBLE_ON_OVERLAP = 15,
  VERON_ERR_BOUND_UNSTABLE = 16,
  VERON_ERR_INCONSISTENT_WINDOW = 17,
  VERON_ERR_BAD_DEGREE = 18,
  VERON_ERR_SPECTRUM_SEARCH_OVERFLOW = 19,
  VERON_ERR_INTERNAL = 20,
  VERON_ERR_UNKNOWN = 21
} veron_status;

const char* veron_status_name(veron_status s);

veron_status veron_last_status(void);
const char* veron_last_error(void);

typedef struct veron_qmatrix veron_qmatrix;
typedef struct veron_lmatrix veron_lmatrix;
typedef struct veron_report veron_report;

veron_qmatrix* veron_qmatrix_parse(const char* json_text);
char* veron_qmatrix_to_json(const veron_qmatrix* m);
void veron_qmatrix_free(veron_qmatrix* m);

veron_lmatrix* veron_lmatrix_parse(const char* json_text);
char* veron_lmatrix_to_json(const veron_lmatrix* m);
void veron_lmatrix_free(veron_lmatrix* m);

void veron_string_free(char* s);

/* Reports carry a JSON result document plus the list of postcondition
 * checks the operation evaluated. */
char* veron_report_result_json(const veron_report* r);
size_t veron_report_check_count(const veron_report* r);
const char* veron_report_check_name(const veron_report* r, size_t i);
int veron_report_check_pass(const veron_report* r, size_t i);
void veron_report_free(veron_report* r);

/* Nilpotent structure: degree, kernel/image dimensions, Jordan partition. */
veron_report* veron_nilpotent_analyze(const veron_qmatrix* a);

/* Coefficients and degree of the polynomial curve t -> exp(tA) u. */
veron_report* veron_orbit_curve(const veron_qmatrix* a, const veron_qmatrix* u);

/* flags_json: {"ascending": [matrix, ...], "descending": [matrix, ...]},
 * each matrix spanning a flag space by columns. Checks levelwise
 * complementarity and, when complementary, the refinement decomposition. */
veron_report* veron_flags_check(const char* flags_json);

/* Complete a nilpotent matrix to an sl(2) triple. */
veron_report* veron_sl2_complete(const veron_qmatrix* a);

/* Flags, rescaling, and the canonical projection for a raising/lowering
 * pair of equal nilpotency degree. */
veron_report* veron_sl2_projection(const veron_qmatrix* a, const veron_qmatrix* b);

/* Decomposition of the tensor product of two irreducibles. */
veron_report* veron_clebsch_gordan(int m, int n);

/* Identify a weight list (values with repetition) as a twisted irreducible. */
veron_report* veron_identify_irrep(const long long* weights, size_t count);

/* Normal bundle of the degree-n rational normal curve by two routes:
 * cokernel section counting and equivariant weight identification. */
veron_report* veron_veronese_normal(int n);

/* basis_json: {"ambient_dim": d, "generators": [matrix, ...]}. Closure,
 * structure constants, center, Killing form, commutant certificate, and a
 * seeded search for a nonzero nilpotent element. */
veron_report* veron_lie_analyze(const char* basis_json, unsigned long long seed);

/* Eigenvalue/eigenspace zero set of the projective vector field of a. */
veron_report* veron_field_zeros(const veron_qmatrix* a);

/* Sections of the twist by n of the bundle with transition matrix t. */
veron_report* veron_h0(const veron_lmatrix* t, int n);

/* Splitting exponents from the section count profile. */
veron_report* veron_splitting_type(const veron_lmatrix* t);

/* T = plus * diag(z^a_i) * minus with verified factor conditions; the
 * z-polynomial factor sits on the left, so diag is the splitting type. */
veron_report* veron_birkhoff_factorize(const veron_lmatrix* t);

#ifdef __cplusplus
}
#endif

#endif /* VERON_H */
