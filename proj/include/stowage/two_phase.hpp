#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "stowage/model.hpp"
#include "stowage/moves.hpp"
#include "stowage/rng.hpp"
#include "stowage/trace.hpp"

namespace stowage {

// Attribute-based tabu memory: keys of return moves with an expiry round.
class TabuList {
public:
    void remember(std::uint64_t move_key, std::int64_t expires_after_round) {
        entries_[move_key] = expires_after_round;
    }

    bool is_active(std::uint64_t move_key, std::int64_t round) const {
        auto it = entries_.find(move_key);
        return it != entries_.end() && it->second >= round;
    }

    std::size_t size() const { return entries_.size(); }
    void clear() { entries_.clear(); }

private:
    std::unordered_map<std::uint64_t, std::int64_t> entries_;
};

// A tabu move is rejected unless it would improve on the global best.
inline bool tabu_rejects(const TabuList& tabu, std::uint64_t move_key, std::int64_t round,
                         Duration objective_after, Duration global_best) {
    return tabu.is_active(move_key, round) && objective_after >= global_best;
}

struct TSParams {
    std::int32_t population_size = 30;
    std::int64_t outer_iterations = 100;
    std::int64_t problem_size = 0;  // usable cell count; 0 resolves from the instance
    std::int64_t tabu_tenure = 7;
    std::int64_t rand_bound = 0;    // magnitude draw bound; 0 resolves to problem_size
    std::int64_t max_radius = 0;    // clamp on the applied magnitude; 0 -> max(1, s/10)

    static TSParams defaults(const Instance& inst) {
        TSParams p;
        p.problem_size = inst.usable_count();
        p.rand_bound = p.problem_size;
        p.max_radius = std::max<std::int64_t>(1, p.problem_size / 10);
        return p;
    }
};

struct VEAParams {
    std::int32_t population_size = 30;
    std::int64_t outer_iterations = 100;
    std::int64_t problem_size = 0;
    std::int64_t rand_bound = 0;
    std::int64_t max_radius = 0;

    static VEAParams defaults(const Instance& inst) {
        VEAParams p;
        p.problem_size = inst.usable_count();
        p.rand_bound = p.problem_size;
        p.max_radius = std::max<std::int64_t>(1, p.problem_size / 10);
        return p;
    }
};

struct MVAParams {
    std::int32_t universe_count = 12;
    std::int32_t next_population_size = 12;  // must be <= universe_count
    std::int64_t outer_iterations = 100;
    std::int64_t problem_size = 0;
    std::int64_t max_radius = 0;

    static MVAParams defaults(const Instance& inst) {
        MVAParams p;
        p.problem_size = inst.usable_count();
        p.max_radius = std::max<std::int64_t>(1, p.problem_size / 10);
        return p;
    }
};

namespace detail {

struct TwoPhaseConfig {
    std::string tag;
    std::int32_t universes = 1;         // parallel incumbent chains
    std::int32_t members_per_round = 1; // perturbed candidates per chain per round
    std::int32_t refine_members = 1;    // candidates in the per-iteration refine round
    std::int64_t outer_iterations = 0;
    std::int64_t tabu_tenure = 0;       // 0 disables the tabu memory
    std::int64_t rand_bound = 1;
    std::int64_t max_radius = 1;
};

// Shared engine behind TS, VEA and MVA. Per outer iteration t each chain
// distributes candidates around its incumbent and adopts the round best
// (X_t); a refine round then re-perturbs around the best chain's X_t (Y_t).
// With the tabu memory enabled, the return moves of the adopted candidate
// are forbidden for `tenure` rounds, with best-objective aspiration.
inline RunTrace run_two_phase(const Instance& instance, const TwoPhaseConfig& cfg,
                              std::uint64_t seed) {
    if (cfg.universes < 1) throw ValidationError(cfg.tag + ": universe/population count must be >= 1");
    if (cfg.members_per_round < 1) throw ValidationError(cfg.tag + ": members per round must be >= 1");
    if (cfg.outer_iterations < 0) throw ValidationError(cfg.tag + ": iterations must be >= 0");
    if (cfg.tabu_tenure < 0) throw ValidationError(cfg.tag + ": tabu tenure must be >= 0");
    if (cfg.rand_bound < 1) throw ValidationError(cfg.tag + ": rand bound must be >= 1");
    if (cfg.max_radius < 1) throw ValidationError(cfg.tag + ": max radius must be >= 1");

    const auto t_start = std::chrono::steady_clock::now();
    Rng rng(seed);

    std::vector<WorkingSolution> chains;
    chains.reserve(cfg.universes);
    for (std::int32_t u = 0; u < cfg.universes; ++u)
        chains.push_back(random_feasible_working(instance, rng));

    WorkingSolution best(instance);
    best.assign_from(chains[0]);
    for (std::int32_t u = 1; u < cfg.universes; ++u)
        if (chains[u].objective() < best.objective()) best.assign_from(chains[u]);

    RunTrace trace;
    trace.algorithm = cfg.tag;
    trace.seed = seed;
    trace.best_values.push_back(best.objective());

    TabuList tabu;
    const bool use_tabu = cfg.tabu_tenure > 0;
    WorkingSolution candidate(instance);
    WorkingSolution round_best(instance);
    WorkingSolution phase_best(instance);
    std::vector<FastMove> cand_moves, round_best_moves;

    auto walk_candidate = [&](const WorkingSolution& seed_sol, std::int64_t round) {
        candidate.assign_from(seed_sol);
        cand_moves.clear();
        // Rand in 1..rand_bound, scaled into the step-count range 1..max_radius.
        const std::int64_t rand_draw = rng.uniform_int(1, cfg.rand_bound);
        const std::int64_t magnitude = std::max<std::int64_t>(
            1, std::min(cfg.max_radius, rand_draw * cfg.max_radius / cfg.rand_bound));
        for (std::int64_t step = 0; step < magnitude; ++step) {
            auto applied = candidate.random_step(rng, [&](const FastMove& m) {
                return use_tabu && tabu_rejects(tabu, key_of(m), round,
                                                candidate.objective() + candidate.delta_of(m),
                                                best.objective());
            });
            if (!applied) break;
            if (use_tabu) cand_moves.push_back(*applied);
        }
        if (candidate.objective() < best.objective()) best.assign_from(candidate);
    };

    for (std::int64_t t = 1; t <= cfg.outer_iterations; ++t) {
        // Phase-1 round for every chain: spread candidates, adopt the best.
        for (std::int32_t u = 0; u < cfg.universes; ++u) {
            bool have = false;
            for (std::int32_t k = 0; k < cfg.members_per_round; ++k) {
                walk_candidate(chains[u], t);
                if (!have || candidate.objective() < round_best.objective()) {
                    have = true;
                    round_best.assign_from(candidate);
                    if (use_tabu) round_best_moves = cand_moves;
                }
            }
            chains[u].assign_from(round_best);
            if (use_tabu)
                for (const FastMove& m : round_best_moves)
                    tabu.remember(inverse_key_of(m), t + cfg.tabu_tenure);
        }

        // X_t: best chain of this iteration; the refine round spreads around it
        // and hands an improvement back to that chain.
        std::int32_t leader = 0;
        for (std::int32_t u = 1; u < cfg.universes; ++u)
            if (chains[u].objective() < chains[leader].objective()) leader = u;
        phase_best.assign_from(chains[leader]);
        bool have_refined = false;
        for (std::int32_t i = 0; i < cfg.refine_members; ++i) {
            walk_candidate(phase_best, t);
            if (!have_refined || candidate.objective() < round_best.objective()) {
                have_refined = true;
                round_best.assign_from(candidate);
            }
        }
        if (have_refined && round_best.objective() < chains[leader].objective())
            chains[leader].assign_from(round_best);

        trace.best_values.push_back(best.objective());
    }

    trace.best_solution = best.to_solution();
    trace.best_value = best.objective();
    trace.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return trace;
}

}  // namespace detail

inline RunTrace run_ts(const Instance& instance, const TSParams& params, std::uint64_t seed) {
    detail::TwoPhaseConfig cfg;
    cfg.tag = "ts";
    cfg.universes = 1;
    cfg.members_per_round = params.population_size;
    cfg.refine_members = params.population_size;
    cfg.outer_iterations = params.outer_iterations;
    cfg.tabu_tenure = params.tabu_tenure;
    cfg.rand_bound = params.rand_bound > 0 ? params.rand_bound
                                           : (params.problem_size > 0 ? params.problem_size
                                                                      : instance.usable_count());
    cfg.max_radius = params.max_radius > 0
                         ? params.max_radius
                         : std::max<std::int64_t>(1, instance.usable_count() / 10);
    return detail::run_two_phase(instance, cfg, seed);
}

inline RunTrace run_vea(const Instance& instance, const VEAParams& params, std::uint64_t seed) {
    detail::TwoPhaseConfig cfg;
    cfg.tag = "vea";
    cfg.universes = 1;
    cfg.members_per_round = params.population_size;
    cfg.refine_members = params.population_size;
    cfg.outer_iterations = params.outer_iterations;
    cfg.tabu_tenure = 0;
    cfg.rand_bound = params.rand_bound > 0 ? params.rand_bound
                                           : (params.problem_size > 0 ? params.problem_size
                                                                      : instance.usable_count());
    cfg.max_radius = params.max_radius > 0
                         ? params.max_radius
                         : std::max<std::int64_t>(1, instance.usable_count() / 10);
    return detail::run_two_phase(instance, cfg, seed);
}

inline RunTrace run_mva(const Instance& instance, const MVAParams& params, std::uint64_t seed) {
    if (params.next_population_size > params.universe_count)
        throw ValidationError("mva: next_population_size must be <= universe_count");
    detail::TwoPhaseConfig cfg;
    cfg.tag = "mva";
    cfg.universes = params.universe_count;
    cfg.members_per_round = params.next_population_size;
    cfg.refine_members = params.next_population_size;
    cfg.outer_iterations = params.outer_iterations;
    cfg.tabu_tenure = 0;
    cfg.rand_bound = params.problem_size > 0 ? params.problem_size : instance.usable_count();
    cfg.max_radius = params.max_radius > 0
                         ? params.max_radius
                         : std::max<std::int64_t>(1, instance.usable_count() / 10);
    return detail::run_two_phase(instance, cfg, seed);
}

}  // namespace stowage
