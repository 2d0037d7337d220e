// Command-line front end over the C interface in pgarc.h.
//
// Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.
// A status of PGARC_EINVAL maps to 2 (the request itself was wrong); file
// and verification problems map to 1.
#include "CLI11.hpp"
#include "pgarc.h"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>
#include <vector>

namespace {

int fail(pgarc_status rc, const std::string& where) {
    std::fprintf(stderr, "error: %s: %s\n", where.c_str(), pgarc_last_error());
    return rc == PGARC_EINVAL ? 2 : 1;
}

int check_q(uint32_t q) {
    uint32_t p = 0, h = 0;
    if (pgarc_factor_q(q, &p, &h) != PGARC_OK) {
        std::fprintf(stderr, "error: %s\n", pgarc_last_error());
        return 2;
    }
    return 0;
}

uint32_t env_workers() {
    const char* w = std::getenv("PGARC_WORKERS");
    if (!w || !*w) return 0;
    long v = std::strtol(w, nullptr, 10);
    return v > 0 ? (uint32_t)v : 0;
}

std::string point_str(pgarc_point P) {
    return std::to_string(P.x0) + ":" + std::to_string(P.x1) + ":" +
           std::to_string(P.x2);
}

std::vector<pgarc_point> drain(pgarc_points* ps) {
    std::vector<pgarc_point> v(pgarc_points_size(ps));
    for (size_t i = 0; i < v.size(); ++i) pgarc_points_get(ps, i, &v[i]);
    pgarc_points_destroy(ps);
    return v;
}

// "8,9,10" or "8..10"; ascending order is the caller's duty.
bool parse_sizes(const std::string& text, std::vector<uint32_t>& out) {
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        char* end = nullptr;
        unsigned long lo = std::strtoul(text.c_str(), &end, 10);
        if (end != text.c_str() + dots) return false;
        const char* rest = text.c_str() + dots + 2;
        unsigned long hi = std::strtoul(rest, &end, 10);
        if (*end || end == rest || hi < lo) return false;
        for (unsigned long k = lo; k <= hi; ++k) out.push_back((uint32_t)k);
        return true;
    }
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        char* end = nullptr;
        unsigned long k = std::strtoul(item.c_str(), &end, 10);
        if (*end || end == item.c_str()) return false;
        out.push_back((uint32_t)k);
        pos = comma == std::string::npos ? text.size() : comma + 1;
    }
    return !out.empty();
}

struct Progress {
    uint32_t total = 0;
    uint32_t best = UINT32_MAX;   // small mode: print on improvement
    std::set<uint32_t>* seen = nullptr;  // spectrum mode: print on new size
};

void progress_cb(uint32_t attempt, uint32_t size, uint32_t covered,
                 uint64_t, void* user) {
    auto* pr = static_cast<Progress*>(user);
    bool report;
    if (pr->seen)
        report = pr->seen->insert(size).second;
    else {
        report = size < pr->best;
        if (report) pr->best = size;
    }
    if (report)
        std::printf("attempt=%u size=%u f=%u/%u\n", attempt, size, covered,
                    pr->total);
}

/* ---------- construct ---------- */

int run_construct(uint32_t q, const std::string& kind_s, int64_t param,
                  int64_t size, const std::string& out, bool verify) {
    if (int rc = check_q(q)) return rc;
    if (kind_s.size() != 1) {
        std::fprintf(stderr, "error: --kind must be A, B, or C\n");
        return 2;
    }
    char kind = kind_s[0];
    if ((param < 0) == (size < 0)) {
        std::fprintf(stderr,
                     "error: give exactly one of --param and --size\n");
        return 2;
    }
    if (param < 0) {
        int64_t delta = kind == 'C' ? 4 : 3;
        if (size < delta + 1) {
            std::fprintf(stderr, "error: size %" PRId64 " is too small for kind %c\n",
                         size, kind);
            return 2;
        }
        param = size - delta;
    }

    pgarc_points* ps = nullptr;
    int complete = 0;
    uint32_t lo = 0, hi = 0;
    pgarc_status rc = pgarc_construct(q, kind, (uint32_t)param, &ps,
                                      &complete, &lo, &hi);
    if (rc != PGARC_OK) return fail(rc, "construct");
    auto pts = drain(ps);

    std::printf("construction %c, q=%u, parameter %" PRId64 ", size %zu\n", kind, q,
                param, pts.size());
    std::printf("valid parameters [%u, %u]\n", lo, hi);

    pgarc_plane* pl = nullptr;
    rc = pgarc_plane_create(q, &pl);
    if (rc != PGARC_OK) return fail(rc, "plane");

    int file_complete = -1;
    bool verified_ok = true;
    if (verify) {
        pgarc_verify_report r;
        rc = pgarc_verify(pl, pts.data(), pts.size(), &r);
        if (rc != PGARC_OK) {
            pgarc_plane_destroy(pl);
            return fail(rc, "verify");
        }
        file_complete = r.is_arc && r.is_complete ? 1 : 0;
        verified_ok = file_complete == 1;
        std::printf("complete: %s (from-scratch check)\n",
                    verified_ok ? "yes" : "no");
    } else {
        std::printf("complete: %s (construction check)\n",
                    complete ? "yes" : "no");
    }

    if (!out.empty()) {
        rc = pgarc_arcfile_write(out.c_str(), pl, pts.data(), pts.size(),
                                 kind, param, file_complete);
        if (rc != PGARC_OK) {
            pgarc_plane_destroy(pl);
            return fail(rc, out);
        }
        std::printf("wrote %s\n", out.c_str());
    } else {
        for (auto& P : pts) std::printf("%s\n", point_str(P).c_str());
    }
    pgarc_plane_destroy(pl);
    return verified_ok ? 0 : 1;
}

/* ---------- critical ---------- */

int run_critical(uint32_t q, const std::string& which) {
    if (int rc = check_q(q)) return rc;
    std::string order = which == "all" ? "HGJ" : which;
    if (order.find_first_not_of("HGJ") != std::string::npos ||
        order.empty()) {
        std::fprintf(stderr, "error: --which must be H, G, J, or all\n");
        return 2;
    }
    int printed = 0, failures = 0;
    for (char w : order) {
        uint32_t value = 0;
        pgarc_status rc = pgarc_critical_compute(q, w, &value);
        if (rc == PGARC_OK) {
            std::printf("%c_bar(%u) = %u\n", w, q, value);
            ++printed;
        } else if (rc == PGARC_ENOTFOUND) {
            std::printf("%c_bar(%u): no value below the sweep ceiling\n", w,
                        q);
            ++failures;
        } else if (which != "all") {
            return fail(rc, std::string("critical ") + w);
        }
    }
    if (!printed && which == "all") {
        std::fprintf(stderr, "error: no critical value applies at q=%u\n", q);
        return failures ? 1 : 2;
    }
    return failures && which != "all" ? 1 : 0;
}

/* ---------- greedy / spectrum ---------- */

int write_arc(pgarc_plane* pl, const std::vector<pgarc_point>& pts,
              const std::string& path) {
    pgarc_status rc = pgarc_arcfile_write(path.c_str(), pl, pts.data(),
                                          pts.size(), 0, 0, 1);
    if (rc != PGARC_OK) return fail(rc, path);
    return 0;
}

int run_greedy(uint32_t q, const std::string& mode, double seed_fraction,
               uint64_t rng_seed, uint32_t attempts, uint64_t budget,
               uint32_t dq, uint32_t stop_at, bool minimize, uint32_t workers,
               const std::string& out_dir, const std::string& sizes_text,
               bool quiet) {
    if (int rc = check_q(q)) return rc;
    bool spectrum = mode == "spectrum";
    if (!spectrum && mode != "small") {
        std::fprintf(stderr, "error: --mode must be small or spectrum\n");
        return 2;
    }

    pgarc_greedy_config cfg = {};
    cfg.q = q;
    cfg.rng_seed = rng_seed;
    cfg.minimize = minimize ? 1 : 0;
    cfg.max_attempts = attempts;
    cfg.max_evaluations = budget;
    cfg.stop_at_size = stop_at;
    cfg.workers = workers ? workers : env_workers();
    cfg.dq = dq;
    cfg.seed_fraction = seed_fraction;

    Progress pr;
    pr.total = q * q + q + 1;
    std::set<uint32_t> seen;
    if (spectrum) pr.seen = &seen;
    if (!quiet) {
        cfg.on_attempt = progress_cb;
        cfg.user = &pr;
    }

    pgarc_prediction pred;
    if (pgarc_predict(q, &pred) == PGARC_OK)
        std::printf("predicted size t_hat(%u) = %.1f\n", q, pred.t_hat);

    std::vector<uint32_t> sizes;
    pgarc_search* s = nullptr;
    pgarc_status rc;
    if (spectrum) {
        if (!sizes_text.empty()) {
            if (!parse_sizes(sizes_text, sizes)) {
                std::fprintf(stderr, "error: cannot parse --sizes '%s'\n",
                             sizes_text.c_str());
                return 2;
            }
        } else {
            uint32_t t_bar = 0;
            if (pgarc_known_size(q, &t_bar, nullptr, nullptr) != PGARC_OK) {
                std::fprintf(stderr,
                             "error: no size record for q=%u; give --sizes\n",
                             q);
                return 2;
            }
            uint32_t top = q % 2 ? q + 1 : q + 2;
            for (uint32_t k = t_bar; k <= top; ++k) sizes.push_back(k);
        }
        rc = pgarc_search_spectrum(&cfg, sizes.data(), sizes.size(), &s);
    } else {
        rc = pgarc_search_small(&cfg, &s);
    }
    if (rc != PGARC_OK) return fail(rc, mode);

    std::printf("attempts=%u evaluations=%" PRIu64 "\n",
                pgarc_search_attempts(s), pgarc_search_evaluations(s));

    pgarc_plane* pl = nullptr;
    if ((rc = pgarc_plane_create(q, &pl)) != PGARC_OK) {
        pgarc_search_destroy(s);
        return fail(rc, "plane");
    }

    int ret = 0;
    if (spectrum) {
        size_t n_unfilled = pgarc_search_unfilled(s, nullptr, 0);
        std::vector<uint32_t> unfilled(n_unfilled);
        pgarc_search_unfilled(s, unfilled.data(), unfilled.size());

        size_t n_found = pgarc_search_sizes(s, nullptr, 0);
        std::vector<uint32_t> found(n_found);
        pgarc_search_sizes(s, found.data(), found.size());

        std::string list;
        for (uint32_t k : found) list += " " + std::to_string(k);
        std::printf("complete arc sizes found:%s\n",
                    list.empty() ? " (none)" : list.c_str());
        list.clear();
        for (uint32_t k : unfilled) list += " " + std::to_string(k);
        std::printf("requested but not reached:%s\n",
                    list.empty() ? " (none)" : list.c_str());

        if (!out_dir.empty()) {
            std::string manifest_text = "size,file\n";
            for (uint32_t k : sizes) {
                pgarc_points* ps = nullptr;
                if (pgarc_search_arc_of_size(s, k, &ps) != PGARC_OK)
                    continue;
                auto pts = drain(ps);
                std::string name = "arc_q" + std::to_string(q) + "_k" +
                                   std::to_string(k) + ".arc";
                if (int e = write_arc(pl, pts, out_dir + "/" + name)) {
                    ret = e;
                    break;
                }
                manifest_text += std::to_string(k) + "," + name + "\n";
            }
            if (!ret) {
                std::string mpath = out_dir + "/manifest.csv";
                FILE* mf = std::fopen(mpath.c_str(), "w");
                if (!mf) {
                    std::fprintf(stderr, "error: cannot write %s\n",
                                 mpath.c_str());
                    ret = 1;
                } else {
                    std::fputs(manifest_text.c_str(), mf);
                    std::fclose(mf);
                    std::printf("wrote %s\n", mpath.c_str());
                }
            }
        }
        // An explicit size list is a guarantee request.
        if (!ret && !sizes_text.empty() && !unfilled.empty()) ret = 1;
    } else {
        uint32_t best = pgarc_search_best_size(s);
        pgarc_points* ps = nullptr;
        if (pgarc_search_best(s, &ps) != PGARC_OK) {
            std::fprintf(stderr, "error: %s\n", pgarc_last_error());
            ret = 1;
        } else {
            auto pts = drain(ps);
            std::printf("best complete arc: size %u at attempt %u\n", best,
                        pgarc_search_best_attempt(s));
            if (!out_dir.empty()) {
                std::string path = out_dir + "/arc_q" + std::to_string(q) +
                                   "_k" + std::to_string(best) + ".arc";
                ret = write_arc(pl, pts, path);
                if (!ret) std::printf("wrote %s\n", path.c_str());
            } else {
                for (auto& P : pts)
                    std::printf("%s\n", point_str(P).c_str());
            }
        }
    }
    pgarc_plane_destroy(pl);
    pgarc_search_destroy(s);
    return ret;
}

/* ---------- verify ---------- */

int run_verify(const std::string& path) {
    pgarc_arcfile* f = nullptr;
    pgarc_status rc = pgarc_arcfile_read(path.c_str(), &f);
    if (rc != PGARC_OK) return fail(rc, path);

    uint32_t q = pgarc_arcfile_q(f);
    pgarc_plane* pl = nullptr;
    if ((rc = pgarc_plane_create(q, &pl)) != PGARC_OK) {
        pgarc_arcfile_destroy(f);
        std::fprintf(stderr, "error: %s: %s\n", path.c_str(),
                     pgarc_last_error());
        return 1;  // the file asked for an unusable field, not the user
    }

    // Codes are only meaningful in the canonical representation.
    char file_poly[64], plane_poly[64];
    if (pgarc_arcfile_poly(f, file_poly, sizeof file_poly) != PGARC_OK ||
        pgarc_plane_poly(pl, plane_poly, sizeof plane_poly) != PGARC_OK ||
        std::strcmp(file_poly, plane_poly) != 0) {
        std::fprintf(stderr,
                     "error: %s: field modulus %s is not the canonical %s\n",
                     path.c_str(), file_poly, plane_poly);
        pgarc_plane_destroy(pl);
        pgarc_arcfile_destroy(f);
        return 1;
    }

    pgarc_points* ps = nullptr;
    pgarc_arcfile_points(f, &ps);
    auto pts = drain(ps);
    int claimed = pgarc_arcfile_complete(f);
    pgarc_arcfile_destroy(f);

    pgarc_verify_report r;
    rc = pgarc_verify(pl, pts.data(), pts.size(), &r);
    pgarc_plane_destroy(pl);
    if (rc != PGARC_OK) return fail(rc, path);

    std::printf("%s: q=%u k=%u\n", path.c_str(), q, r.size);
    if (!r.is_arc) {
        if (r.duplicate)
            std::printf("not an arc: a point occurs twice\n");
        else if (r.has_witness)
            std::printf("not an arc: witness %s %s %s\n",
                        point_str(r.witness[0]).c_str(),
                        point_str(r.witness[1]).c_str(),
                        point_str(r.witness[2]).c_str());
        return 1;
    }
    std::printf("arc: yes\n");
    std::printf("complete: %s (%u points uncovered)\n",
                r.is_complete ? "yes" : "no", r.uncovered_count);
    if (claimed >= 0) {
        bool match = (claimed == 1) == (r.is_complete != 0);
        std::printf("header claim complete=%s: %s\n",
                    claimed ? "true" : "false",
                    match ? "confirmed" : "CONTRADICTED");
        if (!match) return 1;
    }
    return 0;
}

/* ---------- predict ---------- */

int run_predict(uint32_t q) {
    if (int rc = check_q(q)) return rc;
    pgarc_prediction pr;
    pgarc_status rc = pgarc_predict(q, &pr);
    if (rc != PGARC_OK) return fail(rc, "predict");
    std::printf("t_hat(%u) = %.1f\n", q, pr.t_hat);
    if (pr.has_known) {
        uint32_t t_bar = 0;
        int exact = 0, table = 0;
        pgarc_known_size(q, &t_bar, &exact, &table);
        std::printf("smallest known size t_bar(%u) = %u (%s, table %d)\n", q,
                    pr.t_bar, exact ? "exact" : "record", table);
        std::printf("delta = %.2f (%.2f%%)\n", pr.delta_bar, pr.p_bar);
    } else {
        std::printf("no size on record for q=%u\n", q);
    }
    return 0;
}

/* ---------- tables / export ---------- */

int run_export(const std::string& out) {
    FILE* dst = stdout;
    if (!out.empty()) {
        dst = std::fopen(out.c_str(), "w");
        if (!dst) {
            std::fprintf(stderr, "error: cannot write %s\n", out.c_str());
            return 1;
        }
    }
    std::fputs("q,t_bar,exact,source_table\n", dst);
    size_t n = pgarc_reference_count();
    for (size_t i = 0; i < n; ++i) {
        uint32_t q = 0, t_bar = 0;
        int exact = 0, table = 0;
        pgarc_reference_row(i, &q, &t_bar, &exact, &table);
        std::fprintf(dst, "%u,%u,%d,%d\n", q, t_bar, exact, table);
    }
    if (dst != stdout) {
        std::fclose(dst);
        std::printf("wrote %s (%zu rows)\n", out.c_str(), n);
    }
    return 0;
}

int run_tables_check() {
    pgarc_table_check* tc = nullptr;
    pgarc_status rc = pgarc_check_tables(&tc);
    if (rc != PGARC_OK) return fail(rc, "tables");
    int rows = pgarc_table_check_rows(tc);
    size_t bad = pgarc_table_check_mismatches(tc);
    size_t noted = pgarc_table_check_anomalies(tc);
    std::printf("checked %d rows: %zu mismatches, %zu noted anomalies\n",
                rows, bad, noted);
    char buf[512];
    for (size_t i = 0; i < noted; ++i) {
        if (pgarc_table_check_anomaly(tc, i, buf, sizeof buf) == PGARC_OK)
            std::printf("noted: %s\n", buf);
    }
    for (size_t i = 0; i < bad; ++i) {
        if (pgarc_table_check_mismatch(tc, i, buf, sizeof buf) == PGARC_OK)
            std::printf("MISMATCH: %s\n", buf);
    }
    pgarc_table_check_destroy(tc);
    return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complete arcs in the projective plane PG(2,q)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pgarc_version()));

    uint32_t q = 0;
    std::string kind, out, mode = "small", sizes_text, which = "all";
    std::string file;
    int64_t param = -1, size = -1;
    bool verify_flag = false, minimize = false, quiet = false;
    bool do_check = false, do_export = false;
    double seed_fraction = 0.0;
    uint64_t rng_seed = 1, budget = 0;
    uint32_t attempts = 0, dq = 0, stop_at = 0, workers = 0;

    auto* c = app.add_subcommand(
        "construct", "Build an arc from construction family A, B, or C");
    c->add_option("--q", q, "field order")->required();
    c->add_option("--kind", kind, "A, B, or C")->required();
    c->add_option("--param", param, "family parameter (H, G, or J)");
    c->add_option("--size", size,
                  "arc size instead; parameter+3 for A and B, +4 for C");
    c->add_option("--out", out, "arc file to write");
    c->add_flag("--verify", verify_flag,
                "re-check completeness from scratch and record it");

    auto* cr = app.add_subcommand(
        "critical", "Smallest parameter with provable completeness");
    cr->add_option("--q", q, "field order")->required();
    cr->add_option("--which", which, "H, G, J, or all (default all)");

    auto* g = app.add_subcommand(
        "greedy", "Randomized greedy search for complete arcs");
    g->add_option("--q", q, "field order")->required();
    g->add_option("--mode", mode, "small (default) or spectrum");
    g->add_option("--sizes", sizes_text,
                  "spectrum sizes, e.g. 8,9,10 or 8..10");
    g->add_option("--seed-fraction", seed_fraction,
                  "start attempts from this fraction of a conic");
    g->add_option("--rng-seed", rng_seed, "random seed (default 1)");
    g->add_option("--attempts", attempts, "attempt cap (0 = default)");
    g->add_option("--budget", budget,
                  "candidate-evaluation budget (0 = default)");
    g->add_option("--dq", dq, "fixed sample width (0 = default schedule)");
    g->add_option("--stop-at", stop_at,
                  "stop once an arc this small is found");
    g->add_flag("--minimize", minimize,
                "grow large arcs by covering as little as possible");
    g->add_option("--workers", workers,
                  "parallel attempts (default $PGARC_WORKERS or 1)");
    g->add_option("--out", out, "directory for arc files and manifest");
    g->add_flag("--quiet", quiet, "suppress attempt progress lines");

    auto* sp = app.add_subcommand(
        "spectrum", "Shorthand for greedy --mode spectrum");
    sp->add_option("--q", q, "field order")->required();
    sp->add_option("--sizes", sizes_text, "sizes, e.g. 8,9,10 or 8..10");
    sp->add_option("--rng-seed", rng_seed, "random seed (default 1)");
    sp->add_option("--attempts", attempts, "attempt cap (0 = default)");
    sp->add_option("--budget", budget,
                   "candidate-evaluation budget (0 = default)");
    sp->add_option("--workers", workers,
                   "parallel attempts (default $PGARC_WORKERS or 1)");
    sp->add_option("--out", out, "directory for arc files and manifest");
    sp->add_flag("--quiet", quiet, "suppress attempt progress lines");

    auto* v = app.add_subcommand("verify",
                                 "Re-derive arc-ness and completeness");
    v->add_option("file", file, "arc file")->required();

    auto* p = app.add_subcommand("predict",
                                 "Estimated smallest complete-arc size");
    p->add_option("--q", q, "field order")->required();

    auto* t = app.add_subcommand("tables", "Embedded reference tables");
    t->add_flag("--check", do_check,
                "recompute every derived column and compare");
    t->add_flag("--export", do_export, "print rows q,t_bar,exact,source_table");
    t->add_option("--out", out, "write exported rows here");

    auto* e = app.add_subcommand(
        "export", "Shorthand for tables --export");
    e->add_option("--out", out, "write exported rows here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }

    if (c->parsed())
        return run_construct(q, kind, param, size, out, verify_flag);
    if (cr->parsed()) return run_critical(q, which);
    if (g->parsed())
        return run_greedy(q, mode, seed_fraction, rng_seed, attempts, budget,
                          dq, stop_at, minimize, workers, out, sizes_text,
                          quiet);
    if (sp->parsed())
        return run_greedy(q, "spectrum", 0.0, rng_seed, attempts, budget, 0,
                          0, false, workers, out, sizes_text, quiet);
    if (v->parsed()) return run_verify(file);
    if (p->parsed()) return run_predict(q);
    if (t->parsed()) {
        if (do_check == do_export) {
            std::fprintf(stderr,
                         "error: give exactly one of --check and --export\n");
            return 2;
        }
        return do_check ? run_tables_check() : run_export(out);
    }
    if (e->parsed()) return run_export(out);
    return 2;
}
