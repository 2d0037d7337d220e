/* C interface to the PG(2,q) arc library.
 *
 * Everything behind this header is implemented in C++ but exposed through
 * opaque handles and status codes so the shared library keeps a stable C
 * ABI. All functions are thread-safe on distinct handles; a single handle
 * must not be mutated from two threads at once. Functions returning
 * pgarc_status set a thread-local message retrievable with
 * pgarc_last_error() on any nonzero status.
 */
#ifndef PGARC_H
#define PGARC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pgarc_status {
    PGARC_OK = 0,
    PGARC_EINVAL = 1,    /* bad argument, unsupported q, out-of-range parameter */
    PGARC_EIO = 2,       /* file could not be opened, read, or written */
    PGARC_EFORMAT = 3,   /* malformed arc file; see pgarc_arcfile_error_line */
    PGARC_ENOTFOUND = 4, /* no record / no arc of the requested size */
    PGARC_EINTERNAL = 5
} pgarc_status;

/* Message for the calling thread's most recent failure. Valid until the
 * next failing call on the same thread. Never NULL. */
const char* pgarc_last_error(void);

const char* pgarc_version(void);

/* A projective point as three field-element codes (see pgarc_plane_poly
 * for how codes map to field elements). */
typedef struct pgarc_point {
    uint32_t x0, x1, x2;
} pgarc_point;

/* ---------- planes ---------- */

typedef struct pgarc_plane pgarc_plane;

/* Builds GF(q) and the projective plane over it. q must be a prime power
 * not above 2^20. */
pgarc_status pgarc_plane_create(uint32_t q, pgarc_plane** out);
void pgarc_plane_destroy(pgarc_plane* pl);

uint32_t pgarc_plane_q(const pgarc_plane* pl);
uint32_t pgarc_plane_p(const pgarc_plane* pl);
uint32_t pgarc_plane_h(const pgarc_plane* pl);
uint32_t pgarc_plane_num_points(const pgarc_plane* pl); /* q*q + q + 1 */

/* Modulus digit string as used in arc-file headers (lowest coefficient
 * first, dot-separated for p > 9). Fails with PGARC_EINVAL when the
 * buffer cannot hold the string plus its terminator. */
pgarc_status pgarc_plane_poly(const pgarc_plane* pl, char* buf, size_t cap);

/* Factors q without building a plane. PGARC_EINVAL when q is not a prime
 * power in [2, 2^20]. Output pointers may be NULL. */
pgarc_status pgarc_factor_q(uint32_t q, uint32_t* p, uint32_t* h);

/* ---------- point lists ---------- */

typedef struct pgarc_points pgarc_points;

size_t pgarc_points_size(const pgarc_points* ps);
pgarc_status pgarc_points_get(const pgarc_points* ps, size_t i,
                              pgarc_point* out);
void pgarc_points_destroy(pgarc_points* ps);

/* ---------- arcs ---------- */

typedef struct pgarc_arc pgarc_arc;

/* An empty arc on the plane. The plane must outlive the arc. */
pgarc_status pgarc_arc_create(const pgarc_plane* pl, pgarc_arc** out);
void pgarc_arc_destroy(pgarc_arc* a);

/* Adds P when no bisecant of the current arc passes through it. *added
 * reports the outcome; adding a current member is an error. */
pgarc_status pgarc_arc_try_add(pgarc_arc* a, pgarc_point P, int* added);

uint32_t pgarc_arc_size(const pgarc_arc* a);
uint32_t pgarc_arc_covered(const pgarc_arc* a); /* points on bisecants */
int pgarc_arc_is_complete(const pgarc_arc* a);

/* Coverage count after hypothetically adding P; the arc is unchanged.
 * Fails with PGARC_EINVAL unless P could be added. */
pgarc_status pgarc_arc_objective(const pgarc_arc* a, pgarc_point P,
                                 uint32_t* f);

pgarc_status pgarc_arc_points(const pgarc_arc* a, pgarc_points** out);

/* ---------- verification ---------- */

typedef struct pgarc_verify_report {
    int is_arc;
    int is_complete;
    uint32_t size;
    int duplicate;            /* a point occurs twice */
    int has_witness;          /* three collinear members found */
    pgarc_point witness[3];   /* valid when has_witness */
    uint32_t uncovered_count; /* non-members on no bisecant (arcs only) */
} pgarc_verify_report;

/* Re-derives everything from the point list; trusts no incremental state. */
pgarc_status pgarc_verify(const pgarc_plane* pl, const pgarc_point* pts,
                          size_t n, pgarc_verify_report* out);

/* ---------- deterministic constructions ---------- */

/* kind is 'A', 'B', or 'C'. Eligibility: A odd prime q >= 19; B prime
 * power q >= 32 with q mod 4 != 3; C prime power q >= 27 with
 * q mod 4 == 3. Arc sizes are parameter+3 (A, B) or parameter+4 (C). */

/* Valid parameter interval for the kind at this q. */
pgarc_status pgarc_parameter_range(uint32_t q, char kind, uint32_t* lo,
                                   uint32_t* hi);

/* Builds the arc and re-verifies completeness by brute force.
 * *verified_complete reports that check; param_lo/param_hi echo the valid
 * parameter interval at this q (as pgarc_parameter_range). The interval
 * where completeness is certain in advance starts at the critical value
 * instead; see pgarc_critical_compute and pgarc_family_sizes. Any output
 * pointer may be NULL. */
pgarc_status pgarc_construct(uint32_t q, char kind, uint32_t parameter,
                             pgarc_points** out, int* verified_complete,
                             uint32_t* param_lo, uint32_t* param_hi);

/* Smallest parameter from which the construction is provably complete,
 * computed by sweeping the coverage condition. which is 'H' (A), 'G' (B),
 * or 'J' (C). PGARC_ENOTFOUND when the sweep exhausts its ceiling. */
pgarc_status pgarc_critical_compute(uint32_t q, char which, uint32_t* value);

/* Complete-arc size interval [k_min, k_max] the family covers at this q.
 * PGARC_ENOTFOUND when nothing is guaranteed. */
pgarc_status pgarc_family_sizes(uint32_t q, char kind, uint32_t* k_min,
                                uint32_t* k_max);

/* ---------- randomized greedy search ---------- */

typedef struct pgarc_greedy_config {
    uint32_t q;               /* required */
    uint64_t rng_seed;        /* 0 -> default 1 */
    int minimize;             /* 0 grows small arcs, 1 grows large ones */
    uint32_t max_attempts;    /* 0 -> default 100000 */
    uint64_t max_evaluations; /* 0 -> default 1000000 */
    uint32_t stop_at_size;    /* stop once an arc this small is found; 0 off */
    uint32_t workers;         /* 0 -> default 1; results don't depend on it */
    uint32_t dq;              /* fixed sample width; 0 -> default schedule */
    const pgarc_point* seed;  /* start every attempt from these points */
    size_t seed_len;
    double seed_fraction;     /* >0: seed with a conic prefix of
                               * round(fraction*(q+1)) points instead;
                               * exclusive with seed */
    /* Called once per finished attempt, in attempt order, whatever the
     * worker count. Keep it brief; it runs under an internal lock. */
    void (*on_attempt)(uint32_t attempt, uint32_t size, uint32_t covered,
                       uint64_t evaluations, void* user);
    void* user;
} pgarc_greedy_config;

typedef struct pgarc_search pgarc_search;

/* Repeated greedy attempts keeping the smallest complete arc. With no
 * seed, attempts rotate through the documented restart schedule (conic
 * prefixes of 0/4/5/6 points; sample width alternating 30/50 for
 * q <= 512). Deterministic given (config, rng_seed). */
pgarc_status pgarc_search_small(const pgarc_greedy_config* cfg,
                                pgarc_search** out);

/* Seeds attempts with conic prefixes and alternates both step policies
 * until every size in sizes[] has a complete arc or the budget runs out.
 * Sizes must lie between the smallest known size for q and the largest
 * arc. cfg->seed, seed_fraction, and minimize are ignored. */
pgarc_status pgarc_search_spectrum(const pgarc_greedy_config* cfg,
                                   const uint32_t* sizes, size_t n,
                                   pgarc_search** out);

void pgarc_search_destroy(pgarc_search* s);

uint32_t pgarc_search_best_size(const pgarc_search* s);
uint32_t pgarc_search_best_attempt(const pgarc_search* s);
uint32_t pgarc_search_attempts(const pgarc_search* s);
uint64_t pgarc_search_evaluations(const pgarc_search* s);
double pgarc_search_predicted(const pgarc_search* s); /* size estimate for q */

pgarc_status pgarc_search_best(const pgarc_search* s, pgarc_points** out);

/* First complete arc found of exactly this size; PGARC_ENOTFOUND if the
 * search never produced one. */
pgarc_status pgarc_search_arc_of_size(const pgarc_search* s, uint32_t size,
                                      pgarc_points** out);

/* Distinct completed sizes, ascending. Returns the count; fills at most
 * cap entries when buf is non-NULL. */
size_t pgarc_search_sizes(const pgarc_search* s, uint32_t* buf, size_t cap);

/* Requested spectrum sizes never reached, ascending. Same convention. */
size_t pgarc_search_unfilled(const pgarc_search* s, uint32_t* buf,
                             size_t cap);

/* ---------- arc files ---------- */

/* Writes the text format: header "q=<p>^<h> k=<size> poly=<digits>", an
 * optional "# kind=<K> param=<n>" comment (kind 0 omits it), one
 * "x0:x1:x2" line per point, and a trailing "complete=true|false" line
 * when complete is 0 or 1 (-1 omits it). */
pgarc_status pgarc_arcfile_write(const char* path, const pgarc_plane* pl,
                                 const pgarc_point* pts, size_t n, char kind,
                                 int64_t param, int complete);

typedef struct pgarc_arcfile pgarc_arcfile;

pgarc_status pgarc_arcfile_read(const char* path, pgarc_arcfile** out);
void pgarc_arcfile_destroy(pgarc_arcfile* f);

/* After PGARC_EFORMAT from pgarc_arcfile_read on this thread: the
 * offending 1-based line. */
uint32_t pgarc_arcfile_error_line(void);

uint32_t pgarc_arcfile_p(const pgarc_arcfile* f);
uint32_t pgarc_arcfile_h(const pgarc_arcfile* f);
uint32_t pgarc_arcfile_q(const pgarc_arcfile* f);
uint32_t pgarc_arcfile_k(const pgarc_arcfile* f);
char pgarc_arcfile_kind(const pgarc_arcfile* f);    /* 0 when absent */
int64_t pgarc_arcfile_param(const pgarc_arcfile* f);
int pgarc_arcfile_complete(const pgarc_arcfile* f); /* -1 absent, else 0/1 */
pgarc_status pgarc_arcfile_poly(const pgarc_arcfile* f, char* buf,
                                size_t cap);
pgarc_status pgarc_arcfile_points(const pgarc_arcfile* f, pgarc_points** out);

/* ---------- reference data ---------- */

/* Smallest known complete-arc size on record for q. exact reports whether
 * the record is known to be the true minimum (q <= 32); source_table is
 * the published table the value came from (1..4). Output pointers may be
 * NULL. PGARC_ENOTFOUND when q has no record. */
pgarc_status pgarc_known_size(uint32_t q, uint32_t* t_bar, int* exact,
                              int* source_table);

size_t pgarc_reference_count(void);
pgarc_status pgarc_reference_row(size_t i, uint32_t* q, uint32_t* t_bar,
                                 int* exact, int* source_table);

/* Published critical value for which in 'H'/'G'/'J'. */
pgarc_status pgarc_critical_known(uint32_t q, char which, uint32_t* value);
size_t pgarc_critical_known_count(void);
pgarc_status pgarc_critical_known_row(size_t i, uint32_t* q, char* which,
                                      uint32_t* value);

typedef struct pgarc_prediction {
    double t_hat;     /* 0.95821 sqrt(q) ln^0.75 q */
    int has_known;    /* a reference record exists for q */
    uint32_t t_bar;   /* valid when has_known */
    double delta_bar; /* t_bar - t_hat, valid when has_known */
    double p_bar;     /* 100 delta_bar / t_bar, valid when has_known */
} pgarc_prediction;

pgarc_status pgarc_predict(uint32_t q, pgarc_prediction* out);

/* Upper bound for the largest size the second-largest complete arcs can
 * take, plus a note on which eligibility clauses produced it. */
pgarc_status pgarc_spectrum_ceiling(uint32_t q, uint32_t* value, char* trace,
                                    size_t cap);

/* ---------- published-table self-check ---------- */

typedef struct pgarc_table_check pgarc_table_check;

/* Recomputes every derived column of the embedded tables and compares
 * against the printed values. Mismatches are genuine failures; noted
 * anomalies are the cataloged printed-value slips that the recomputation
 * is expected to flag. */
pgarc_status pgarc_check_tables(pgarc_table_check** out);
void pgarc_table_check_destroy(pgarc_table_check* c);

int pgarc_table_check_rows(const pgarc_table_check* c);
size_t pgarc_table_check_mismatches(const pgarc_table_check* c);
size_t pgarc_table_check_anomalies(const pgarc_table_check* c);
pgarc_status pgarc_table_check_mismatch(const pgarc_table_check* c, size_t i,
                                        char* buf, size_t cap);
pgarc_status pgarc_table_check_anomaly(const pgarc_table_check* c, size_t i,
                                       char* buf, size_t cap);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PGARC_H */
