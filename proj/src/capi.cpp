#include "pgarc.h"

#include "arc.hpp"
#include "arcfile.hpp"
#include "construct.hpp"
#include "greedy.hpp"
#include "refdata.hpp"

#include <cmath>
#include <cstring>
#include <string>

using namespace pgarc;

namespace {

thread_local std::string t_error = "no error";
thread_local uint32_t t_arcfile_line = 0;

void set_error(std::string msg) { t_error = std::move(msg); }

// Maps C++ failures onto status codes. Everything the core throws for bad
// input is invalid_argument/domain_error/out_of_range; file-open problems
// surface as plain runtime_error from arcfile.cpp.
template <typename F>
pgarc_status guarded(F&& fn) noexcept {
    try {
        return fn();
    } catch (const ArcFileError& e) {
        set_error(e.what());
        t_arcfile_line = e.line;
        return PGARC_EFORMAT;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return PGARC_EINVAL;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return PGARC_EINVAL;
    } catch (const std::out_of_range& e) {
        set_error(e.what());
        return PGARC_EINVAL;
    } catch (const std::runtime_error& e) {
        set_error(e.what());
        return PGARC_EIO;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return PGARC_EINTERNAL;
    } catch (...) {
        set_error("unexpected exception");
        return PGARC_EINTERNAL;
    }
}

pgarc_status fail_invalid(const char* msg) {
    set_error(msg);
    return PGARC_EINVAL;
}

pgarc_status copy_string(const std::string& s, char* buf, size_t cap) {
    if (!buf || cap < s.size() + 1) {
        set_error("buffer too small: need " + std::to_string(s.size() + 1) +
                  " bytes");
        return PGARC_EINVAL;
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return PGARC_OK;
}

Point to_point(const Plane& pl, pgarc_point P) {
    uint32_t q = pl.q();
    if (P.x0 >= q || P.x1 >= q || P.x2 >= q)
        throw std::invalid_argument("point element code not below q");
    if (P.x0 == 0 && P.x1 == 0 && P.x2 == 0)
        throw std::invalid_argument("zero triple is not a projective point");
    return {P.x0, P.x1, P.x2};
}

std::vector<Point> to_points(const Plane& pl, const pgarc_point* pts,
                             size_t n) {
    if (n && !pts) throw std::invalid_argument("null point array");
    std::vector<Point> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) v.push_back(to_point(pl, pts[i]));
    return v;
}

}  // namespace

struct pgarc_plane {
    std::shared_ptr<const Plane> pl;
};

struct pgarc_points {
    std::vector<Point> pts;
};

struct pgarc_arc {
    Arc arc;
};

struct pgarc_search {
    SearchOutcome out;
};

struct pgarc_arcfile {
    ArcFileContents a;
};

struct pgarc_table_check {
    TableCheck c;
};

extern "C" {

const char* pgarc_last_error(void) { return t_error.c_str(); }

const char* pgarc_version(void) { return "1.0.0"; }

/* ---------- planes ---------- */

pgarc_status pgarc_plane_create(uint32_t q, pgarc_plane** out) {
    if (!out) return fail_invalid("null output pointer");
    return guarded([&] {
        auto pl = std::make_shared<Plane>(field_of_order(q));
        *out = new pgarc_plane{std::move(pl)};
        return PGARC_OK;
    });
}

void pgarc_plane_destroy(pgarc_plane* pl) { delete pl; }

uint32_t pgarc_plane_q(const pgarc_plane* pl) { return pl->pl->q(); }
uint32_t pgarc_plane_p(const pgarc_plane* pl) { return pl->pl->field().p(); }
uint32_t pgarc_plane_h(const pgarc_plane* pl) { return pl->pl->field().h(); }
uint32_t pgarc_plane_num_points(const pgarc_plane* pl) {
    return pl->pl->num_points();
}

pgarc_status pgarc_plane_poly(const pgarc_plane* pl, char* buf, size_t cap) {
    return copy_string(poly_digits(pl->pl->field()), buf, cap);
}

pgarc_status pgarc_factor_q(uint32_t q, uint32_t* p, uint32_t* h) {
    return guarded([&] {
        QClass c = q_class(q);
        if (!c.is_prime_power) {
            set_error("q = " + std::to_string(q) +
                      " is not a prime power in [2, 2^20]");
            return PGARC_EINVAL;
        }
        if (p) *p = c.p;
        if (h) *h = c.h;
        return PGARC_OK;
    });
}

/* ---------- point lists ---------- */

size_t pgarc_points_size(const pgarc_points* ps) { return ps->pts.size(); }

pgarc_status pgarc_points_get(const pgarc_points* ps, size_t i,
                              pgarc_point* out) {
    if (!out) return fail_invalid("null output pointer");
    if (i >= ps->pts.size()) return fail_invalid("point index out of range");
    const Point& P = ps->pts[i];
    *out = {P.x0, P.x1, P.x2};
    return PGARC_OK;
}

void pgarc_points_destroy(pgarc_points* ps) { delete ps; }

/* ---------- arcs ---------- */

pgarc_status pgarc_arc_create(const pgarc_plane* pl, pgarc_arc** out) {
    if (!pl || !out) return fail_invalid("null argument");
    return guarded([&] {
        *out = new pgarc_arc{Arc(pl->pl)};
        return PGARC_OK;
    });
}

void pgarc_arc_destroy(pgarc_arc* a) { delete a; }

pgarc_status pgarc_arc_try_add(pgarc_arc* a, pgarc_point P, int* added) {
    if (!a) return fail_invalid("null arc");
    return guarded([&] {
        auto r = a->arc.try_add(to_point(a->arc.plane(), P));
        if (added) *added = r.added ? 1 : 0;
        return PGARC_OK;
    });
}

uint32_t pgarc_arc_size(const pgarc_arc* a) { return a->arc.size(); }
uint32_t pgarc_arc_covered(const pgarc_arc* a) {
    return a->arc.covered_count();
}
int pgarc_arc_is_complete(const pgarc_arc* a) {
    return a->arc.is_complete() ? 1 : 0;
}

pgarc_status pgarc_arc_objective(const pgarc_arc* a, pgarc_point P,
                                 uint32_t* f) {
    if (!a || !f) return fail_invalid("null argument");
    return guarded([&] {
        *f = a->arc.objective_f(to_point(a->arc.plane(), P));
        return PGARC_OK;
    });
}

pgarc_status pgarc_arc_points(const pgarc_arc* a, pgarc_points** out) {
    if (!a || !out) return fail_invalid("null argument");
    *out = new pgarc_points{a->arc.points()};
    return PGARC_OK;
}

/* ---------- verification ---------- */

pgarc_status pgarc_verify(const pgarc_plane* pl, const pgarc_point* pts,
                          size_t n, pgarc_verify_report* out) {
    if (!pl || !out) return fail_invalid("null argument");
    return guarded([&] {
        auto v = to_points(*pl->pl, pts, n);
        VerifyReport r = verify_arc(*pl->pl, v);
        *out = {};
        out->is_arc = r.is_arc;
        out->is_complete = r.is_complete;
        out->size = r.size;
        out->duplicate = r.duplicate;
        out->has_witness = r.has_witness;
        for (int i = 0; i < 3; ++i)
            out->witness[i] = {r.witness[i].x0, r.witness[i].x1,
                               r.witness[i].x2};
        out->uncovered_count = (uint32_t)r.uncovered.size();
        return PGARC_OK;
    });
}

/* ---------- deterministic constructions ---------- */

pgarc_status pgarc_parameter_range(uint32_t q, char kind, uint32_t* lo,
                                   uint32_t* hi) {
    return guarded([&] {
        uint32_t a = 0, b = 0;
        parameter_range(kind_from_letter(kind), q, a, b);
        if (lo) *lo = a;
        if (hi) *hi = b;
        return PGARC_OK;
    });
}

pgarc_status pgarc_construct(uint32_t q, char kind, uint32_t parameter,
                             pgarc_points** out, int* verified_complete,
                             uint32_t* param_lo, uint32_t* param_hi) {
    return guarded([&] {
        auto pl = std::make_shared<Plane>(field_of_order(q));
        Kind k = kind_from_letter(kind);
        ConstructionResult r = k == Kind::A   ? build_A(pl, parameter)
                               : k == Kind::B ? build_B(pl, parameter)
                                              : build_C(pl, parameter);
        if (out) *out = new pgarc_points{r.arc.points()};
        if (verified_complete) *verified_complete = r.verified_complete;
        if (param_lo) *param_lo = r.param_min;
        if (param_hi) *param_hi = r.param_max;
        return PGARC_OK;
    });
}

pgarc_status pgarc_critical_compute(uint32_t q, char which, uint32_t* value) {
    if (!value) return fail_invalid("null output pointer");
    return guarded([&] {
        Plane pl(field_of_order(q));
        CriticalResult r;
        switch (which) {
            case 'H': r = critical_H(pl); break;
            case 'G': r = critical_G(pl); break;
            case 'J': r = critical_J(pl); break;
            default: return fail_invalid("which must be 'H', 'G', or 'J'");
        }
        if (r.overflow) {
            set_error("sweep exhausted the parameter ceiling");
            return PGARC_ENOTFOUND;
        }
        *value = r.value;
        return PGARC_OK;
    });
}

pgarc_status pgarc_family_sizes(uint32_t q, char kind, uint32_t* k_min,
                                uint32_t* k_max) {
    return guarded([&] {
        Plane pl(field_of_order(q));
        FamilyRange r = family_range(kind_from_letter(kind), pl);
        if (!r.guaranteed) {
            set_error("no guaranteed size interval at this q");
            return PGARC_ENOTFOUND;
        }
        if (k_min) *k_min = r.k_min;
        if (k_max) *k_max = r.k_max;
        return PGARC_OK;
    });
}

/* ---------- randomized greedy search ---------- */

namespace {

GreedyConfig to_config(const pgarc_greedy_config& c) {
    GreedyConfig g;
    g.q = c.q;
    g.rng_seed = c.rng_seed ? c.rng_seed : 1;
    g.policy = c.minimize ? StepPolicy::MinimizeF : StepPolicy::MaximizeF;
    if (c.max_attempts) g.max_attempts = c.max_attempts;
    if (c.max_evaluations) g.max_evaluations = c.max_evaluations;
    g.stop_at_size = c.stop_at_size;
    if (c.workers) g.workers = c.workers;
    if (c.dq) {
        uint32_t d = c.dq;
        g.dq = [d](uint32_t, uint32_t) { return d; };
    }
    if (c.seed_len && c.seed_fraction > 0)
        throw std::invalid_argument("seed and seed_fraction are exclusive");
    Field f = field_of_order(c.q);
    if (c.seed_len) {
        Plane pl(f);
        g.seed = to_points(pl, c.seed, c.seed_len);
    } else if (c.seed_fraction > 0) {
        auto m = (uint32_t)llround(c.seed_fraction * (c.q + 1));
        m = std::min(m, c.q);  // conic prefixes use the affine points only
        for (uint32_t e = 0; e < m; ++e) g.seed.push_back(conic_affine(f, e));
    }
    if (c.on_attempt) {
        auto cb = c.on_attempt;
        void* user = c.user;
        g.on_attempt = [cb, user](const AttemptLog& lg) {
            cb(lg.attempt, lg.size, lg.covered, lg.evaluations, user);
        };
    }
    return g;
}

}  // namespace

pgarc_status pgarc_search_small(const pgarc_greedy_config* cfg,
                                pgarc_search** out) {
    if (!cfg || !out) return fail_invalid("null argument");
    return guarded([&] {
        *out = new pgarc_search{search_small(to_config(*cfg))};
        return PGARC_OK;
    });
}

pgarc_status pgarc_search_spectrum(const pgarc_greedy_config* cfg,
                                   const uint32_t* sizes, size_t n,
                                   pgarc_search** out) {
    if (!cfg || !out) return fail_invalid("null argument");
    if (n && !sizes) return fail_invalid("null size array");
    return guarded([&] {
        pgarc_greedy_config c = *cfg;  // seeding and policy are per-attempt here
        c.seed = nullptr;
        c.seed_len = 0;
        c.seed_fraction = 0;
        c.minimize = 0;
        std::vector<uint32_t> want(sizes, sizes + n);
        *out = new pgarc_search{search_spectrum(to_config(c), want)};
        return PGARC_OK;
    });
}

void pgarc_search_destroy(pgarc_search* s) { delete s; }

uint32_t pgarc_search_best_size(const pgarc_search* s) {
    return s->out.best_size;
}
uint32_t pgarc_search_best_attempt(const pgarc_search* s) {
    return s->out.best_attempt;
}
uint32_t pgarc_search_attempts(const pgarc_search* s) {
    return s->out.attempts_run;
}
uint64_t pgarc_search_evaluations(const pgarc_search* s) {
    return s->out.total_evaluations;
}
double pgarc_search_predicted(const pgarc_search* s) { return s->out.t_hat; }

pgarc_status pgarc_search_best(const pgarc_search* s, pgarc_points** out) {
    if (!s || !out) return fail_invalid("null argument");
    if (s->out.best.empty()) {
        set_error("the search completed no arc");
        return PGARC_ENOTFOUND;
    }
    *out = new pgarc_points{s->out.best};
    return PGARC_OK;
}

pgarc_status pgarc_search_arc_of_size(const pgarc_search* s, uint32_t size,
                                      pgarc_points** out) {
    if (!s || !out) return fail_invalid("null argument");
    auto it = s->out.by_size.find(size);
    if (it == s->out.by_size.end()) {
        set_error("no complete arc of size " + std::to_string(size) +
                  " was found");
        return PGARC_ENOTFOUND;
    }
    *out = new pgarc_points{it->second};
    return PGARC_OK;
}

size_t pgarc_search_sizes(const pgarc_search* s, uint32_t* buf, size_t cap) {
    size_t i = 0;
    for (const auto& [size, pts] : s->out.by_size) {
        if (buf && i < cap) buf[i] = size;
        ++i;
    }
    return i;
}

size_t pgarc_search_unfilled(const pgarc_search* s, uint32_t* buf,
                             size_t cap) {
    for (size_t i = 0; i < s->out.unfilled.size(); ++i)
        if (buf && i < cap) buf[i] = s->out.unfilled[i];
    return s->out.unfilled.size();
}

/* ---------- arc files ---------- */

pgarc_status pgarc_arcfile_write(const char* path, const pgarc_plane* pl,
                                 const pgarc_point* pts, size_t n, char kind,
                                 int64_t param, int complete) {
    if (!path || !pl) return fail_invalid("null argument");
    return guarded([&] {
        auto v = to_points(*pl->pl, pts, n);
        std::optional<bool> comp;
        if (complete == 0 || complete == 1) comp = complete == 1;
        write_arc_file(path, pl->pl->field(), v, kind, param, comp);
        return PGARC_OK;
    });
}

pgarc_status pgarc_arcfile_read(const char* path, pgarc_arcfile** out) {
    if (!path || !out) return fail_invalid("null argument");
    return guarded([&] {
        *out = new pgarc_arcfile{read_arc_file(std::string(path))};
        return PGARC_OK;
    });
}

void pgarc_arcfile_destroy(pgarc_arcfile* f) { delete f; }

uint32_t pgarc_arcfile_error_line(void) { return t_arcfile_line; }

uint32_t pgarc_arcfile_p(const pgarc_arcfile* f) { return f->a.p; }
uint32_t pgarc_arcfile_h(const pgarc_arcfile* f) { return f->a.h; }
uint32_t pgarc_arcfile_q(const pgarc_arcfile* f) { return f->a.q; }
uint32_t pgarc_arcfile_k(const pgarc_arcfile* f) { return f->a.k; }
char pgarc_arcfile_kind(const pgarc_arcfile* f) { return f->a.kind; }
int64_t pgarc_arcfile_param(const pgarc_arcfile* f) { return f->a.param; }
int pgarc_arcfile_complete(const pgarc_arcfile* f) {
    if (!f->a.complete) return -1;
    return *f->a.complete ? 1 : 0;
}

pgarc_status pgarc_arcfile_poly(const pgarc_arcfile* f, char* buf,
                                size_t cap) {
    return copy_string(f->a.poly, buf, cap);
}

pgarc_status pgarc_arcfile_points(const pgarc_arcfile* f,
                                  pgarc_points** out) {
    if (!f || !out) return fail_invalid("null argument");
    *out = new pgarc_points{f->a.points};
    return PGARC_OK;
}

/* ---------- reference data ---------- */

pgarc_status pgarc_known_size(uint32_t q, uint32_t* t_bar, int* exact,
                              int* source_table) {
    auto rec = known_size(q);
    if (!rec) {
        set_error("no reference record for q = " + std::to_string(q));
        return PGARC_ENOTFOUND;
    }
    if (t_bar) *t_bar = rec->t_bar;
    if (exact) *exact = rec->exact;
    if (source_table) *source_table = rec->source_table;
    return PGARC_OK;
}

size_t pgarc_reference_count(void) { return reference_records().size(); }

pgarc_status pgarc_reference_row(size_t i, uint32_t* q, uint32_t* t_bar,
                                 int* exact, int* source_table) {
    auto rows = reference_records();
    if (i >= rows.size()) return fail_invalid("row index out of range");
    if (q) *q = rows[i].q;
    if (t_bar) *t_bar = rows[i].t_bar;
    if (exact) *exact = rows[i].exact;
    if (source_table) *source_table = rows[i].source_table;
    return PGARC_OK;
}

pgarc_status pgarc_critical_known(uint32_t q, char which, uint32_t* value) {
    if (which != 'H' && which != 'G' && which != 'J')
        return fail_invalid("which must be 'H', 'G', or 'J'");
    auto v = critical_value(q, which);
    if (!v) {
        set_error(std::string("no published value of ") + which +
                  " for q = " + std::to_string(q));
        return PGARC_ENOTFOUND;
    }
    if (value) *value = *v;
    return PGARC_OK;
}

size_t pgarc_critical_known_count(void) { return critical_records().size(); }

pgarc_status pgarc_critical_known_row(size_t i, uint32_t* q, char* which,
                                      uint32_t* value) {
    auto rows = critical_records();
    if (i >= rows.size()) return fail_invalid("row index out of range");
    if (q) *q = rows[i].q;
    if (which) *which = rows[i].which;
    if (value) *value = rows[i].value;
    return PGARC_OK;
}

pgarc_status pgarc_predict(uint32_t q, pgarc_prediction* out) {
    if (!out) return fail_invalid("null output pointer");
    if (q < 2) return fail_invalid("q must be at least 2");
    PredictionRecord r = predicted_size(q);
    *out = {};
    out->t_hat = r.t_hat;
    out->has_known = r.has_known;
    out->t_bar = r.t_bar;
    out->delta_bar = r.delta_bar;
    out->p_bar = r.p_bar;
    return PGARC_OK;
}

pgarc_status pgarc_spectrum_ceiling(uint32_t q, uint32_t* value, char* trace,
                                    size_t cap) {
    return guarded([&] {
        SpectrumCeiling s = spectrum_ceiling(q);
        if (trace) {
            pgarc_status rc = copy_string(s.trace, trace, cap);
            if (rc != PGARC_OK) return rc;
        }
        if (value) *value = s.value;
        return PGARC_OK;
    });
}

/* ---------- published-table self-check ---------- */

pgarc_status pgarc_check_tables(pgarc_table_check** out) {
    if (!out) return fail_invalid("null output pointer");
    return guarded([&] {
        *out = new pgarc_table_check{check_tables()};
        return PGARC_OK;
    });
}

void pgarc_table_check_destroy(pgarc_table_check* c) { delete c; }

int pgarc_table_check_rows(const pgarc_table_check* c) { return c->c.rows; }

size_t pgarc_table_check_mismatches(const pgarc_table_check* c) {
    return c->c.mismatches.size();
}

size_t pgarc_table_check_anomalies(const pgarc_table_check* c) {
    return c->c.noted_anomalies.size();
}

pgarc_status pgarc_table_check_mismatch(const pgarc_table_check* c, size_t i,
                                        char* buf, size_t cap) {
    if (i >= c->c.mismatches.size())
        return fail_invalid("mismatch index out of range");
    return copy_string(c->c.mismatches[i], buf, cap);
}

pgarc_status pgarc_table_check_anomaly(const pgarc_table_check* c, size_t i,
                                       char* buf, size_t cap) {
    if (i >= c->c.noted_anomalies.size())
        return fail_invalid("anomaly index out of range");
    return copy_string(c->c.noted_anomalies[i], buf, cap);
}

} /* extern "C" */
