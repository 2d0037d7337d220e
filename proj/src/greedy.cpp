#include "greedy.hpp"

#include "construct.hpp"
#include "refdata.hpp"
#include "rng.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

namespace pgarc {

uint32_t default_dq(uint32_t q, uint32_t /*step*/, uint32_t k) {
    if (q <= 512) return 30;
    return static_cast<uint64_t>(k) * k > q ? 300 : 100;
}

bool default_random_step(uint32_t /*q*/, uint32_t /*step*/, uint32_t /*k*/) {
    // Sampling from the first step on beats scanning the opening steps:
    // full scans there repeat the same strong moves every attempt and the
    // restarts stop exploring. Arcs below three points pick uniformly at
    // zero cost either way.
    return true;
}

AttemptResult greedy_attempt(const std::shared_ptr<const Plane>& pl,
                             const GreedyConfig& cfg, uint32_t attempt) {
    if (pl->q() != cfg.q) throw std::invalid_argument("greedy_attempt: q mismatch");
    Rng rng = Rng::for_attempt(cfg.rng_seed, attempt);

    Arc arc(pl);
    for (const Point& P : cfg.seed)
        if (!arc.try_add(P).added)
            throw std::invalid_argument("greedy_attempt: seed set is not an arc");

    AttemptResult res;
    res.log.attempt = attempt;

    // Candidate pool: all addable indices, compacted before each step as
    // coverage spreads. Sampling shuffles a prefix in place, which keeps the
    // pool order a deterministic function of the attempt's rng stream.
    std::vector<PointIdx> pool;
    pool.reserve(pl->num_points());
    for (PointIdx i = 0; i < pl->num_points(); ++i)
        if (arc.addable(i)) pool.push_back(i);

    uint32_t step = 0;
    for (;;) {
        std::erase_if(pool, [&](PointIdx i) { return !arc.addable(i); });
        if (pool.empty()) break;
        ++step;
        uint32_t k = arc.size();
        PointIdx chosen;
        if (k < 3) {
            // Below three points every candidate yields the same coverage
            // (0, q+1, or 3q), so extremizing reduces to the uniform
            // tie-break and no evaluations are spent.
            chosen = pool[rng.below(pool.size())];
        } else {
            uint64_t m = pool.size();
            bool random = cfg.random_step ? cfg.random_step(step, k)
                                          : default_random_step(cfg.q, step, k);
            if (random) {
                uint64_t d = cfg.dq ? cfg.dq(step, k) : default_dq(cfg.q, step, k);
                if (d < 1) d = 1;
                if (d < m) {
                    for (uint64_t j = 0; j < d; ++j) {
                        uint64_t r = j + rng.below(pool.size() - j);
                        std::swap(pool[j], pool[r]);
                    }
                    m = d;
                }
            }
            bool minimize = cfg.policy == StepPolicy::MinimizeF;
            uint32_t best_f = 0;
            std::vector<uint64_t> ties;
            for (uint64_t j = 0; j < m; ++j) {
                uint32_t fv = arc.objective_f(pl->point_at(pool[j]));
                if (ties.empty() || (minimize ? fv < best_f : fv > best_f)) {
                    best_f = fv;
                    ties.assign(1, j);
                } else if (fv == best_f) {
                    ties.push_back(j);
                }
            }
            res.log.evaluations += m;
            chosen = pool[ties[rng.below(ties.size())]];
        }
        arc.try_add(pl->point_at(chosen));
        res.log.f_trajectory.push_back(arc.covered_count());
    }

    res.points = arc.points();
    res.log.size = arc.size();
    res.log.covered = arc.covered_count();
    return res;
}

namespace {

// Runs attempts 0,1,2,... and keeps the serial prefix: attempt i is included
// iff every earlier attempt's evaluations sum below the budget and none of
// them satisfied the stop predicate. Workers race ahead but results past the
// cut are discarded, so any worker count reproduces the single-threaded
// outcome, including the order of on_attempt calls.
std::vector<AttemptResult> run_prefix(
    const GreedyConfig& cfg, const std::function<AttemptResult(uint32_t)>& run_one,
    const std::function<bool(const AttemptResult&)>& stop_after) {
    uint32_t maxa = cfg.max_attempts;
    if (cfg.workers <= 1) {
        std::vector<AttemptResult> out;
        uint64_t cum = 0;
        for (uint32_t a = 0; a < maxa && cum < cfg.max_evaluations; ++a) {
            out.push_back(run_one(a));
            cum += out.back().log.evaluations;
            if (cfg.on_attempt) cfg.on_attempt(out.back().log);
            if (stop_after(out.back())) break;
        }
        return out;
    }

    std::vector<std::optional<AttemptResult>> slots(maxa);
    std::mutex mu;
    std::atomic<uint32_t> dispenser{0};
    std::atomic<bool> stop{false};
    uint32_t frontier = 0;
    uint64_t cum = 0;
    uint32_t cut = maxa;

    auto worker = [&] {
        while (!stop.load(std::memory_order_relaxed)) {
            uint32_t a = dispenser.fetch_add(1);
            if (a >= maxa) break;
            AttemptResult r = run_one(a);
            std::lock_guard<std::mutex> lk(mu);
            slots[a] = std::move(r);
            // Once a cut is fixed the walk must not resume, or results
            // landing later would push the frontier past it.
            while (!stop.load(std::memory_order_relaxed) && frontier < maxa &&
                   slots[frontier].has_value()) {
                if (cum >= cfg.max_evaluations) {
                    cut = frontier;
                    stop.store(true);
                    break;
                }
                cum += slots[frontier]->log.evaluations;
                if (cfg.on_attempt) cfg.on_attempt(slots[frontier]->log);
                bool done = stop_after(*slots[frontier]);
                ++frontier;
                if (done) {
                    cut = frontier;
                    stop.store(true);
                    break;
                }
            }
        }
    };

    std::vector<std::thread> threads;
    for (uint32_t w = 0; w < cfg.workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    uint32_t n = std::min(cut, frontier);
    std::vector<AttemptResult> out;
    out.reserve(n);
    for (uint32_t a = 0; a < n; ++a) out.push_back(std::move(*slots[a]));
    return out;
}

SearchOutcome assemble(uint32_t q, std::vector<AttemptResult> results,
                       const std::vector<uint32_t>& wanted) {
    SearchOutcome o;
    o.q = q;
    o.t_hat = predicted_size(q).t_hat;
    o.attempts_run = static_cast<uint32_t>(results.size());
    for (AttemptResult& r : results) {
        o.total_evaluations += r.log.evaluations;
        uint32_t s = r.log.size;
        if (o.best.empty() || s < o.best_size) {
            o.best = r.points;
            o.best_size = s;
            o.best_attempt = r.log.attempt;
        }
        o.by_size.emplace(s, std::move(r.points));
        o.logs.push_back(std::move(r.log));
    }
    for (uint32_t s : wanted)
        if (!o.by_size.count(s)) o.unfilled.push_back(s);
    return o;
}

}  // namespace

SearchOutcome search_small(const GreedyConfig& cfg) {
    auto pl = std::make_shared<Plane>(field_of_order(cfg.q));
    const Field& f = pl->field();

    // Default restart schedule. Short conic prefixes pull the search into
    // regions plain restarts rarely reach, and alternating two sample
    // widths trades greed for diversity; several smallest known sizes fall
    // to only one leg of the rotation.
    std::array<std::vector<Point>, 4> seeds;
    const uint32_t len[4] = {0, 4, 5, 6};
    for (int i = 1; i < 4; ++i) {
        uint32_t m = std::min(len[i], cfg.q);
        for (uint32_t e = 0; e < m; ++e) seeds[i].push_back(conic_affine(f, e));
    }
    const bool rotate_seed = cfg.seed.empty();
    const bool rotate_d = !cfg.dq && cfg.q <= 512;

    auto rs = run_prefix(
        cfg,
        [&](uint32_t a) {
            GreedyConfig c = cfg;
            if (rotate_seed) c.seed = seeds[a % 4];
            if (rotate_d && (a / 4) % 2 == 1)
                c.dq = [](uint32_t, uint32_t) { return 50u; };
            return greedy_attempt(pl, c, a);
        },
        [&](const AttemptResult& r) {
            return cfg.stop_at_size != 0 && r.log.size <= cfg.stop_at_size;
        });
    return assemble(cfg.q, std::move(rs), {});
}

SearchOutcome search_spectrum(const GreedyConfig& cfg,
                              const std::vector<uint32_t>& sizes) {
    uint32_t lower = 3;
    if (auto rec = known_size(cfg.q)) lower = rec->t_bar;
    for (uint32_t s : sizes)
        if (s < lower || s > max_arc_size(cfg.q))
            throw std::invalid_argument(
                "search_spectrum: size outside [smallest known, m2(2,q)]");

    auto pl = std::make_shared<Plane>(field_of_order(cfg.q));
    const Field& f = pl->field();

    // Conic prefixes of the four stated fractions of the q+1 conic points.
    std::array<std::vector<Point>, 4> seeds;
    const int pct[4] = {15, 20, 25, 30};
    for (int i = 0; i < 4; ++i) {
        auto m = static_cast<uint32_t>(std::llround(pct[i] * (cfg.q + 1) / 100.0));
        for (uint32_t e = 0; e < m; ++e) seeds[i].push_back(conic_affine(f, e));
    }

    std::set<uint32_t> remaining(sizes.begin(), sizes.end());
    auto rs = run_prefix(
        cfg,
        [&](uint32_t a) {
            GreedyConfig c = cfg;
            c.seed = seeds[a % 4];
            c.policy = (a / 4) % 2 == 0 ? StepPolicy::MaximizeF : StepPolicy::MinimizeF;
            return greedy_attempt(pl, c, a);
        },
        [&](const AttemptResult& r) {
            remaining.erase(r.log.size);
            return remaining.empty();
        });
    return assemble(cfg.q, std::move(rs), sizes);
}

}  // namespace pgarc
