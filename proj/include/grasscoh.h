/* C interface to the Grassmannian cohomology library.
 *
 * All results are returned as heap-allocated JSON strings; release them with
 * gc_string_free. Rationals travel as strings "p" or "p/q". Ring elements use
 * the text form "3/2*s[2,1] - s[1] + 1" ("s[2] + u*(s[1] - 2)" on products).
 * Endomorphisms use {"c": ["<class>", ...], "u": "<class>"}.
 *
 * Every function returns GC_OK on success. On failure the output pointer is
 * left untouched and gc_last_error() describes the problem (thread-local).
 */
#ifndef GRASSCOH_H
#define GRASSCOH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    GC_OK = 0,
    GC_ERR_PARSE = 2,        /* malformed expression, JSON, or rational */
    GC_ERR_PRECONDITION = 3, /* mathematical precondition violated */
    GC_ERR_INTERNAL = 4
} gc_status;

/* Opaque ring context: sphere dimension m (0 = bare Grassmannian) over
 * CG_{n,k}. */
typedef struct gc_context gc_context;

gc_status gc_context_create(int m, int n, int k, gc_context** out);
void gc_context_destroy(gc_context* ctx);

/* Thread-local description of the most recent failure. Do not free. */
const char* gc_last_error(void);
void gc_string_free(char* s);

/* {"n":..,"k":..,"betti":[..]} */
gc_status gc_betti(int n, int k, char** json_out);

/* Parse and reduce an expression to canonical form:
 * {"input":..,"class":..,"homogeneous":..,"degree":..} */
gc_status gc_reduce(gc_context* ctx, const char* expr, char** json_out);

/* Product of two expressions, same payload as gc_reduce. */
gc_status gc_mul(gc_context* ctx, const char* a, const char* b, char** json_out);

/* Well-definedness verdict for an endomorphism:
 * {"well_defined":..,"failing_relation":..,"residue":..} (m >= 1 only). */
gc_status gc_endo_check(gc_context* ctx, const char* endo_json, char** json_out);

/* {"kind":..,"lambda":..,"u_kind":..,"mu":..,"witness":..} */
gc_status gc_classify(gc_context* ctx, const char* endo_json, char** json_out);

/* Constructors; emit the endomorphism JSON form. */
gc_status gc_adams(gc_context* ctx, const char* lambda, const char* mu, char** json_out);
gc_status gc_complement(gc_context* ctx, const char* lambda, const char* mu, char** json_out);

/* Single derivation space: {"n":..,"k":..,"drop":..,"dimension":..,"basis":[..]} */
gc_status gc_derivation_space(int n, int k, int drop, char** json_out);

/* All (n,k,drop) with n <= nmax, 0 < k <= n/2, even drops up to 2k(n-k).
 * threads <= 0 picks a default; GRASSCOH_THREADS caps it. Output is sorted by
 * (n,k,drop). as_csv selects "n,k,drop,unknowns,rank,dimension" CSV. */
gc_status gc_derivations_sweep(int nmax, int threads, int as_csv, char** json_out);

/* Extension nullspace for phi(c_i) = lambda^i c_i + u P_i. */
gc_status gc_extension_nullspace(int m, int n, int k, const char* lambda, char** json_out);

/* Grid n <= nmax, m in {2,4,6} with m <= 2k(n-k), lambda in {1,2,-1,1/2}. */
gc_status gc_extension_sweep(int nmax, int threads, int as_csv, char** json_out);

/* Closed-form Lefschetz numbers (both twists); u_family selects the collapsed
 * d_0 form. m = 0 uses the bare-Grassmannian closed form. */
gc_status gc_lefschetz_closed(int m, int n, int k, const char* lambda, const char* mu,
                              const char* lambda1, const char* mu1, int u_family,
                              char** json_out);

/* Alternating-trace Lefschetz numbers of two endomorphisms, with the
 * per-degree ledger and, for m odd, both sign conventions. */
gc_status gc_lefschetz_trace(gc_context* ctx, const char* f_endo_json,
                             const char* g_endo_json, char** json_out);

/* Decision procedure over the coincidence theorems. Family descriptors:
 * {"family":"adams"|"complement"|"u_family","lambda":"p/q","mu":"p/q"}. */
gc_status gc_criteria(int m, int n, int k, const char* f_json, const char* g_json,
                      char** json_out);

/* Criteria sweep over a fixed rational grid for (lambda,mu,lambda1,mu1) at
 * each (m,n,k) with n <= nmax, m <= mmax. CSV columns:
 * m,n,k,lambda,mu,lambda1,mu1,L_untwisted,L_twisted,theorem,conclusion. */
gc_status gc_criteria_sweep(int mmax, int nmax, int threads, int as_csv, char** json_out);

/* Rational-root nonvanishing certificate; k(n-k) must be even. */
gc_status gc_certify_lemma(int n, int k, char** json_out);

/* Basis of the fixed subring of theta* in one degree (m >= 1 only). */
gc_status gc_fixed_basis(int m, int n, int k, int degree, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GRASSCOH_H */
