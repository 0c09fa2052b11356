/* C interface to the quantized Borel/parabolic coordinate-algebra library.
 *
 * All entry points operate on an opaque session carrying the matrix size n,
 * the degree r, and the two nonzero rational deformation parameters.  Every
 * function returns 0 on success and a nonzero status on failure; after a
 * failure, qba_last_error() and qba_last_error_code() describe what went
 * wrong.  Results are returned as malloc'd JSON strings (*out); release them
 * with qba_string_free().  Sessions are not thread-safe; use one per thread.
 */
#ifndef QBA_H
#define QBA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qba_session qba_session;

#define QBA_OK 0
#define QBA_ERROR 1
#define QBA_BAD_HANDLE 2

/* Library version string, e.g. "1.0.0". */
const char* qba_version(void);

/* Creates a session; alpha and beta are rational literals "p" or "p/q".
 * Returns NULL when the arguments are invalid (n < 1, r < 0, zero or
 * malformed parameters). */
qba_session* qba_session_new(int n, int r, const char* alpha, const char* beta);
void qba_session_free(qba_session* session);

/* Message and symbolic code ("ParseError", "NotInvertible", ...) of the most
 * recent failure on this session; empty strings when no failure occurred.
 * The returned pointers stay valid until the next call on the session. */
const char* qba_last_error(const qba_session* session);
const char* qba_last_error_code(const qba_session* session);

/* Normal form of an algebra expression over generators c[i,j].  shape is
 * either NULL (the free quantum matrix algebra A(n)) or an array of n
 * entries defining the quotient A(b).  JSON: an element object. */
int qba_normal_form(qba_session* session, const char* expr, const int* shape,
                    char** out);

/* Comultiplication of an expression; legs are reduced in A(b) when shape is
 * given.  JSON: a two-leg tensor object. */
int qba_comultiply(qba_session* session, const char* expr, const int* shape,
                   char** out);

/* The normal-monomial basis of A(shape; r) (shape NULL = A(delta; r)).
 * JSON: {"dim", "basis":[omega matrices]}. */
int qba_basis(qba_session* session, const int* shape, char** out);

/* Quantum determinant: verifies that the row and column expansions agree
 * (FormulaMismatch otherwise) and returns the element JSON. */
int qba_quantum_determinant(qba_session* session, char** out);

/* Resolves all overlap ambiguities of the rewriting system for A(n) or
 * A(shape) both ways.  JSON: {"ambiguities", "ok", "failures"}. */
int qba_check_diamond(qba_session* session, const int* shape, char** out);

/* Applies the induction word F_{word[len-1]} ... F_{word[0]} to the
 * one-dimensional comodule k_weight (weight has n entries summing to the
 * session degree).  JSON: {"comodule", "character"}. */
int qba_apply_word(qba_session* session, const int* word, size_t word_len,
                   const int* weight, char** out);

/* Demazure operator word applied to the monomial x^weight; word[0] acts
 * first.  JSON: a character polynomial. */
int qba_demazure_word(qba_session* session, const int* word, size_t word_len,
                      const int* weight, char** out);

/* Compares ch(F_word k_weight) with the Demazure word on x^weight; steps
 * leaving the licensed character range are marked "unverified".  JSON: a
 * report with both characters and the verdict. */
int qba_character_compare(qba_session* session, const int* word,
                          size_t word_len, const int* weight, char** out);

/* Checks the commutative-diagram families (1..10) for the session's n and r
 * on the test modules {k_a : |a| = r}.  families may be NULL (all ten).
 * JSON: list of per-instance reports; *all_pass is set when non-NULL. */
int qba_check_diagrams(qba_session* session, const int* families,
                       size_t family_count, int* all_pass, char** out);

/* Graded exact-sequence checks 0 -> A(b;r-1) (x) k -> A(b;r) -> A(b-v_l;r)
 * -> 0.  With shape non-NULL: the single instance (shape, l) at the session
 * degree.  With shape NULL: sweeps all non-decreasing b <= (n,...,n), all
 * valid l, and all degrees 0..r (l is ignored).  JSON: list of reports;
 * *all_pass is set when non-NULL. */
int qba_check_exact_sequences(qba_session* session, const int* shape, int l,
                              int* all_pass, char** out);

/* The dual algebra S^-(n,r) of A(delta;r), with unit and associativity
 * verified during construction.  JSON: {"dim", "basis", "unit",
 * "products"}. */
int qba_schur_algebra(qba_session* session, char** out);

/* Frees a string returned through any *out parameter. */
void qba_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* QBA_H */
