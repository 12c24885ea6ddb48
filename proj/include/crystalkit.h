/* crystalkit.h
 * C interface to the crystalkit library: Littlewood-Richardson and
 * transition coefficients, crystal decompositions, highest weight sets,
 * straightening and canonical bases in the q-deformed exterior algebra,
 * socle layer tables, and the identity checks, plus rendered command
 * output in the same text, JSON, DOT, and CSV forms the command line
 * tool prints.
 *
 * Conventions:
 *   - Every fallible function returns a status code and reports the
 *     failure message through ck_last_error().
 *   - Partitions are passed as comma-separated part lists ("3,2,1");
 *     the empty string is the empty partition.
 *   - Strings returned through a char** out parameter are heap
 *     allocated; release them with ck_string_free().
 */

#ifndef CRYSTALKIT_H
#define CRYSTALKIT_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define CK_OK 0
#define CK_DOMAIN_ERROR 1
#define CK_VERIFY_FAIL 2
#define CK_BUDGET_EXCEEDED 3
#define CK_INTERNAL_ERROR 4

/* Library version, statically allocated. */
const char* ck_version(void);

/* Message of the most recent failure on the calling thread, statically
 * allocated; the empty string after a success. */
const char* ck_last_error(void);

/* Release a string returned through a char** out parameter. */
void ck_string_free(char* s);

/* Element budget shared by the crystal closures; the initial value comes
 * from the CRYSTALKIT_BUDGET environment variable. */
long ck_element_budget(void);
int ck_set_element_budget(long budget);

/* Littlewood-Richardson coefficient c^{lam}_{mu nu}. */
int ck_lr_coefficient(const char* lam, const char* mu, const char* nu, long* out);

/* Transition coefficients between the two bases of the character ring:
 * m^{mu,nu}_{zeta,eta} and n^{sigma,tau}_{mu,nu}. */
int ck_m_coeff(const char* mu, const char* nu, const char* zeta, const char* eta,
               long* out);
int ck_n_coeff(const char* sigma, const char* tau, const char* mu, const char* nu,
               long* out);

/* Size of the highest weight set attached to the pair (mu, nu) and the
 * target pair (zeta, eta) at the given level; level <= 0 selects
 * |mu| + |nu| + 2. */
int ck_hset_size(const char* mu, const char* nu, const char* zeta, const char* eta,
                 long level, long* out);

/* Identity checks. CK_VERIFY_FAIL reports a genuine mismatch. For the
 * Cauchy check, kind is "ee" or "eh"; on mismatch, *detail (when detail is
 * non-null) receives the first differing coefficient. */
int ck_transition_check(long degree);
int ck_cauchy_verify(const char* kind, long num_vars, long degree, char** detail);

/* Rendered command output. Each renderer writes the full output of the
 * matching command line subcommand to *out; json = 0 selects the default
 * form (text, DOT, or CSV), json = 1 the versioned JSON form. */

int ck_render_lr(const char* lam, const char* mu, const char* nu, int json,
                 char** out);

/* Tensor product decomposition of two extremal weight crystals labeled
 * (a_plus, a_minus) and (b_plus, b_minus) over the alphabet 1..rank;
 * rank <= 0 selects the stable rank (total size + 2). */
int ck_render_tensor_decompose(const char* a_plus, const char* a_minus,
                               const char* b_plus, const char* b_minus, long rank,
                               int json, char** out);

/* Elements of the bitableaux crystal B_{mu,nu} over 1..rank; rank <= 0
 * selects max(1, |mu| + |nu|). check != 0 instead verifies the embedding
 * into the tensor crystal and reports CK_VERIFY_FAIL on a mismatch. */
int ck_render_bitableaux(const char* mu, const char* nu, long rank, int check,
                         int json, char** out);

/* Decomposition of the 0/1 matrix crystal on m x n under both color
 * families: one row per component with its conjugate pair of labels. */
int ck_render_howe(long m, long n, int json, char** out);

/* Highest weight set for (mu, nu) against (zeta, eta) at the given level;
 * level <= 0 selects |mu| + |nu| + 2. */
int ck_render_hset(const char* mu, const char* nu, const char* zeta,
                   const char* eta, long level, int json, char** out);

/* Straighten a word in the exterior algebra on [1..m] x [1..n]. The word
 * is ";"-separated letters, each "a,b"; strategy is "leftmost" or
 * "rightmost" (null or empty selects leftmost). */
int ck_render_straighten(long m, long n, const char* word, const char* strategy,
                         int json, char** out);

/* Canonical basis of one bi-weight space of the exterior algebra on
 * [1..m] x [1..n]: the base-change matrix from the canonical basis to the
 * standard monomials as CSV (json = 0) or as JSON rows (json = 1). */
int ck_render_canonical_basis(long m, long n, const char* row_sums,
                              const char* col_sums, int json, char** out);

/* Crystal graph in DOT form (json = 0) or as node and edge lists
 * (json = 1), capped at 10000 nodes. kind selects the realization:
 *   "matrix" uses m, n; "sst" uses mu, rank; "dual" uses nu, rank;
 *   "bitab" uses mu, nu, rank. Unused arguments are ignored. */
int ck_render_crystal_graph(const char* kind, const char* mu, const char* nu,
                            long m, long n, long rank, int json, char** out);

/* Socle layer table of V_{a,b} (x) V_{g,d} at one layer, or at every layer
 * 0..min(M, N) when layer < 0. */
int ck_render_socle(const char* a_plus, const char* a_minus, const char* g_plus,
                    const char* g_minus, long layer, int json, char** out);

/* Mutual inversion of the transition matrices up to the given degree. */
int ck_render_transition_check(long degree, int json, char** out);

/* Truncated non-symmetric Cauchy identity; kind is "ee" or "eh". On a
 * mismatch returns CK_VERIFY_FAIL and *out carries the first differing
 * coefficient. */
int ck_render_cauchy_verify(const char* kind, long num_vars, long degree,
                            int json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CRYSTALKIT_H */
