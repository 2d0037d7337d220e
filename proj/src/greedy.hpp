// Randomized greedy search for complete arcs.
//
// An attempt grows an arc from a seed set: each step either scans every
// addable uncovered point or samples d_q of them, evaluates the coverage
// objective on the candidates, and adds an extremizer (ties broken uniformly
// at random). The arc is complete exactly when no candidate remains. Runs
// are deterministic functions of (config, rng_seed, attempt index), and the
// evaluation budget is counted in candidates scored, not wall-clock, so
// results reproduce across machines and worker counts.
#pragma once

#include "arc.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace pgarc {

enum class StepPolicy {
    MaximizeF,  // cover as much as possible per step: small complete arcs
    MinimizeF,  // cover as little as possible: large complete arcs
};

struct GreedyConfig {
    uint32_t q = 0;
    std::vector<Point> seed;  // S0; must be an arc (possibly empty)
    uint64_t rng_seed = 1;
    StepPolicy policy = StepPolicy::MaximizeF;

    // Candidate sample size for a random step, as a function of the 1-based
    // step number and the current arc size. Null uses default_dq.
    std::function<uint32_t(uint32_t step, uint32_t k)> dq;
    // Whether a step samples d_q candidates instead of scanning all of them.
    // Null uses default_random_step.
    std::function<bool(uint32_t step, uint32_t k)> random_step;

    uint32_t max_attempts = 100000;
    // Total candidate-evaluation budget across attempts. An attempt may
    // start only while the evaluations of all prior attempts stay below
    // this; the attempt that crosses it still finishes.
    uint64_t max_evaluations = 1000000;
    // Stop launching attempts once one ends at this size or smaller
    // (0 disables).
    uint32_t stop_at_size = 0;
    uint32_t workers = 1;  // attempt-level parallelism

    // Called once per finished attempt, in attempt order, regardless of
    // worker count. Runs under an internal lock; keep it brief.
    std::function<void(const struct AttemptLog&)> on_attempt;
};

// Defaults: every step samples. The width is 30 for q <= 512; on larger
// planes it is 100 until the arc outgrows sqrt(q), then 300.
uint32_t default_dq(uint32_t q, uint32_t step, uint32_t k);
bool default_random_step(uint32_t q, uint32_t step, uint32_t k);

struct AttemptLog {
    uint32_t attempt = 0;
    uint32_t size = 0;          // final (complete) arc size
    uint32_t covered = 0;       // final covered_count
    uint64_t evaluations = 0;   // candidates scored by this attempt
    std::vector<uint32_t> f_trajectory;  // covered_count after each addition
};

struct AttemptResult {
    std::vector<Point> points;
    AttemptLog log;
};

struct SearchOutcome {
    uint32_t q = 0;
    std::vector<Point> best;  // minimum-size complete arc found
    uint32_t best_size = 0;
    uint32_t best_attempt = 0;
    double t_hat = 0.0;  // predicted size; the gap tells whether to continue
    uint64_t total_evaluations = 0;
    uint32_t attempts_run = 0;
    std::map<uint32_t, std::vector<Point>> by_size;  // first arc seen per size
    std::vector<uint32_t> unfilled;  // requested spectrum sizes never reached
    std::vector<AttemptLog> logs;
};

// One greedy run from cfg.seed to a complete arc. Deterministic given
// (cfg, attempt). Throws std::invalid_argument if the seed is not an arc
// or cfg.q does not match the plane.
AttemptResult greedy_attempt(const std::shared_ptr<const Plane>& pl,
                             const GreedyConfig& cfg, uint32_t attempt);

// Independent attempts, keeping the smallest complete arc. With cfg.seed
// empty the attempts rotate through a restart schedule: seeds cycle over
// conic prefixes of 0, 4, 5 and 6 points (clamped to q), and for q <= 512
// with cfg.dq unset the sample width alternates between 30 and 50 every
// four attempts. Each leg of that rotation reaches smallest known sizes
// the others miss, so the mix is the documented default; supplying
// cfg.seed or cfg.dq pins that part of the schedule instead.
SearchOutcome search_small(const GreedyConfig& cfg);

// Attempts seeded with conic prefixes of roughly 15/20/25/30 percent of the
// conic's q+1 points, alternating the two step policies, until every
// requested size is registered or the budget runs out. Sizes must lie
// between the smallest known complete-arc size for q (3 if unrecorded) and
// m2(2,q). cfg.seed and cfg.policy are ignored here.
SearchOutcome search_spectrum(const GreedyConfig& cfg,
                              const std::vector<uint32_t>& sizes);

}  // namespace pgarc
