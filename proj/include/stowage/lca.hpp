#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "stowage/model.hpp"
#include "stowage/moves.hpp"
#include "stowage/rng.hpp"
#include "stowage/trace.hpp"

namespace stowage {

struct LCAParams {
    std::int32_t population_size = 30;
    std::int64_t iterations = 100;
    std::int64_t alpha = 1;  // exploration radius, 0 < alpha < problem size

    static LCAParams defaults(const Instance& inst) {
        LCAParams p;
        p.alpha = std::max<std::int64_t>(1, inst.usable_count() / 10);
        return p;
    }

    void validate(const Instance& inst) const {
        if (population_size < 1) throw ValidationError("lca: population_size must be >= 1");
        if (iterations < 0) throw ValidationError("lca: iterations must be >= 0");
        if (alpha < 1 || alpha >= inst.usable_count())
            throw ValidationError("lca: alpha must satisfy 0 < alpha < " +
                                  std::to_string(inst.usable_count()));
    }
};

namespace detail {

// One incumbent plus a population of "eggs". Per iteration, members that fail
// to beat the incumbent are re-seeded near it with an alpha-sized
// perturbation, every member then takes one unit step, and the incumbent
// follows the population best.
class LcaState {
public:
    LcaState(const Instance& instance, const LCAParams& params, std::uint64_t seed)
        : params_(params),
          rng_(seed),
          incumbent_(random_feasible_working(instance, rng_)),
          best_(instance) {
        best_.assign_from(incumbent_);
    }

    // Population is created lazily so a zero-iteration run stays untouched.
    void step() {
        const Instance& inst = incumbent_.instance();
        if (members_.empty()) {
            members_.reserve(params_.population_size);
            for (std::int32_t k = 0; k < params_.population_size; ++k) {
                members_.emplace_back(inst);
                members_.back().assign_from(incumbent_);
                members_.back().random_walk(rng_.uniform_int(1, params_.alpha), rng_);
                note_best(members_.back());
            }
        }
        const Duration incumbent_obj = incumbent_.objective();
        std::size_t round_best = 0;
        for (std::size_t k = 0; k < members_.size(); ++k) {
            WorkingSolution& m = members_[k];
            if (!(m.objective() < incumbent_obj)) {
                m.assign_from(incumbent_);
                m.random_walk(rng_.uniform_int(1, params_.alpha), rng_);
            }
            m.random_walk(1, rng_);
            note_best(m);
            if (m.objective() < members_[round_best].objective()) round_best = k;
        }
        incumbent_.assign_from(members_[round_best]);
    }

    const std::vector<WorkingSolution>& members() const { return members_; }
    const WorkingSolution& incumbent() const { return incumbent_; }
    const WorkingSolution& best() const { return best_; }

private:
    void note_best(const WorkingSolution& s) {
        if (s.objective() < best_.objective()) best_.assign_from(s);
    }

    LCAParams params_;
    Rng rng_;
    WorkingSolution incumbent_;
    WorkingSolution best_;
    std::vector<WorkingSolution> members_;
};

}  // namespace detail

inline RunTrace run_lca(const Instance& instance, const LCAParams& params, std::uint64_t seed) {
    params.validate(instance);
    const auto t_start = std::chrono::steady_clock::now();

    detail::LcaState state(instance, params, seed);
    RunTrace trace;
    trace.algorithm = "lca";
    trace.seed = seed;
    trace.best_values.push_back(state.best().objective());
    for (std::int64_t iter = 1; iter <= params.iterations; ++iter) {
        state.step();
        trace.best_values.push_back(state.best().objective());
    }

    trace.best_solution = state.best().to_solution();
    trace.best_value = state.best().objective();
    trace.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return trace;
}

}  // namespace stowage
