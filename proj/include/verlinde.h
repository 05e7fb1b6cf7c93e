/* verlinde - modular data, Verlinde fusion rings, conformal branching rules,
 * and level-rank duality for affine su(N) and the level-1 catalog algebras.
 *
 * C interface: opaque handles plus status codes.  All functions returning
 * vl_status leave outputs untouched on failure; vl_last_error() describes
 * the most recent failure on the calling thread.  Strings returned through
 * char** are heap-allocated; release them with vl_string_free().
 */
#ifndef VERLINDE_H
#define VERLINDE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define VL_API_VERSION 1

typedef enum vl_status {
  VL_OK = 0,
  VL_E_INVALID = 1,      /* bad argument (out of range index, null pointer) */
  VL_E_PARSE = 2,        /* unparseable algebra/weight/label literal */
  VL_E_UNKNOWN = 3,      /* unknown builtin name or label */
  VL_E_INTEGRALITY = 4,  /* Verlinde sum too far from an integer */
  VL_E_BUDGET = 5,       /* branching search exceeded its node budget */
  VL_E_PAIRING = 6,      /* level-rank pairing empty or ambiguous */
  VL_E_AMBIGUOUS = 7,    /* solver or extension ambiguity */
  VL_E_VERIFY = 8,       /* modular axioms or branching verification failed */
  VL_E_LIMIT = 9,        /* resource guard tripped (label count) */
  VL_E_INTERNAL = 10
} vl_status;

const char* vl_status_name(vl_status s);

/* Message for the last failure on this thread; empty string if none. */
const char* vl_last_error(void);

void vl_string_free(char* s);

/* Process-wide knobs (set before creating handles). */
void vl_set_tolerance(double tol);       /* modular axiom tolerance, default 1e-9 */
void vl_set_max_labels(int max_labels);  /* primary-count guard, default 1000 */

/* ---------------- modular data ---------------- */

typedef struct vl_algebra vl_algebra;

/* spec: "su3@9", "su6@1", "so8@1", "e6@1", "e7@1".  suN@1 resolves to the
 * level-1 catalog (labels w0..w{N-1}). */
vl_status vl_algebra_open(const char* spec, vl_algebra** out);
void vl_algebra_close(vl_algebra* a);

int vl_algebra_size(const vl_algebra* a);
const char* vl_algebra_spec(const vl_algebra* a);

vl_status vl_algebra_label_name(const vl_algebra* a, int idx, char** out);
/* Dynkin-form name ("d[1,1]") for weight labels; same as label_name otherwise. */
vl_status vl_algebra_label_dynkin(const vl_algebra* a, int idx, char** out);
/* Accepts "[2,1]", "d[1,1]", "w3", "3", "v", "s", "c", "e", "eb", "f", "1". */
vl_status vl_algebra_find_label(const vl_algebra* a, const char* literal, int* idx);

vl_status vl_algebra_s_entry(const vl_algebra* a, int i, int j, double* re, double* im);
vl_status vl_algebra_t_entry(const vl_algebra* a, int i, double* re, double* im);
vl_status vl_algebra_h(const vl_algebra* a, int i, long long* num, long long* den);
vl_status vl_algebra_central_charge(const vl_algebra* a, long long* num, long long* den);
vl_status vl_algebra_conjugate(const vl_algebra* a, int i, int* out);
vl_status vl_algebra_qdim(const vl_algebra* a, int i, double* out);
/* Verlinde fusion coefficient N_{ab}^c. */
vl_status vl_algebra_fusion(const vl_algebra* a, int x, int y, int z, long long* out);

/* {"labels": [...], "S_re": [[...]], "S_im": [[...]], "T": [[re,im],...]} */
vl_status vl_smatrix_json(const vl_algebra* a, char** json);
/* Axiom report (symmetry, unitarity, vacuum row, S^2=C, (ST)^3=S^2). */
vl_status vl_algebra_verify_json(const vl_algebra* a, char** json);

/* ---------------- conformal inclusions ---------------- */

typedef struct vl_inclusion vl_inclusion;

/* name: su3_9_in_e6, su3_3_in_so8, su4_2_in_su6, series_a(n), series_b(n),
 * product(m,n). */
vl_status vl_inclusion_open(const char* name, vl_inclusion** out);
void vl_inclusion_close(vl_inclusion* inc);

const char* vl_inclusion_name(const vl_inclusion* inc);
/* Fresh handles onto the two algebras; close them independently. */
vl_status vl_inclusion_sub(const vl_inclusion* inc, vl_algebra** out);
vl_status vl_inclusion_amb(const vl_inclusion* inc, vl_algebra** out);
vl_status vl_inclusion_b(const vl_inclusion* inc, int amb_idx, int sub_idx, long long* out);
vl_status vl_inclusion_label_disjoint(const vl_inclusion* inc, int* out);
/* Branching verification report (vacuum, S-intertwining, h-integrality,
 * conjugation symmetry). */
vl_status vl_inclusion_verify_json(const vl_inclusion* inc, char** json);
/* Versioned branching table document. */
vl_status vl_branch_json(const vl_inclusion* inc, char** json);

typedef struct vl_kw_scan vl_kw_scan;

vl_status vl_kw_scan_run(const vl_inclusion* inc, vl_kw_scan** out);
void vl_kw_scan_close(vl_kw_scan* s);
int vl_kw_scan_violation_count(const vl_kw_scan* s);
long long vl_kw_scan_pairs_checked(const vl_kw_scan* s);
vl_status vl_kw_scan_violation(const vl_kw_scan* s, int idx, int* i, int* lam, int* j,
                               int* mu, double* re, double* im);
vl_status vl_kw_check_json(const vl_inclusion* inc, char** json);

/* Exact integer inequality over all (mu1, mu2, i) triples. */
vl_status vl_kw_inequality(const vl_inclusion* inc, long long* triples,
                           long long* failures, long long* strict);

/* ---------------- level-rank duality ---------------- */

/* beta: weight of su(m)_n -> weight of su(n)_m (orbit representative). */
vl_status vl_levelrank_beta(int m, int n, const char* weight, char** out);
/* The unique partner of (weight, Lambda) in the su(mn)_1 decomposition. */
vl_status vl_levelrank_pair(int m, int n, const char* weight, int Lambda, char** out);
/* Full pairing table as JSON. */
vl_status vl_levelrank_table_json(int m, int n, char** json);
/* Theorem-4.2 style closure comparison; *pass is 1 on success. */
vl_status vl_levelrank_verify_th42(int n, int* pass, char** json);

/* ---------------- consolidated battery ---------------- */

vl_status vl_reproduce_paper(int* pass, char** json);

#ifdef __cplusplus
}
#endif

#endif /* VERLINDE_H */
