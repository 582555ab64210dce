#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "stowage/model.hpp"
#include "stowage/moves.hpp"
#include "stowage/rng.hpp"
#include "stowage/trace.hpp"

namespace stowage {

struct SAParams {
    std::int32_t population_size = 30;
    std::int64_t iterations = 100;
    double divisor_M = 2.0;            // must be > 1
    double initial_temperature = 0.0;  // <= 0 resolves to max(1, T+Q)
    double cooling_factor = 0.95;
    std::int64_t neighborhood_radius = 1;

    static SAParams defaults(const Instance& inst) {
        SAParams p;
        p.neighborhood_radius = std::max<std::int64_t>(1, inst.usable_count() / 10);
        p.initial_temperature =
            static_cast<double>(std::max<Duration>(1, inst.base_time_T() + inst.penalty_Q()));
        return p;
    }

    void validate() const {
        if (population_size < 1) throw ValidationError("sa: population_size must be >= 1");
        if (iterations < 0) throw ValidationError("sa: iterations must be >= 0");
        if (divisor_M <= 1.0) throw ValidationError("sa: divisor M must be > 1");
        if (!(cooling_factor > 0.0 && cooling_factor < 1.0))
            throw ValidationError("sa: cooling_factor must be in (0,1)");
        if (neighborhood_radius < 1) throw ValidationError("sa: neighborhood_radius must be >= 1");
    }
};

// Textbook acceptance rule, kept as a reference point for tests.
inline double standard_accept_probability(double delta_c, double temperature) {
    if (temperature <= 0.0) throw std::invalid_argument("temperature must be > 0");
    if (delta_c <= 0.0) return 1.0;
    return std::exp(-delta_c / temperature);
}

// Modified acceptance score: e^(1/dc) for strict improvements, e^(-dc/t)/M
// otherwise. dc == 0 takes the non-improving branch.
inline double sa_accept_probability(double delta_c, double temperature, double divisor_M) {
    if (temperature <= 0.0) throw std::invalid_argument("temperature must be > 0");
    if (divisor_M <= 1.0) throw std::invalid_argument("divisor M must be > 1");
    if (delta_c < 0.0) return std::exp(1.0 / delta_c);
    return std::exp(-delta_c / temperature) / divisor_M;
}

// Each iteration scores a population perturbed around the incumbent and moves
// to the member with the highest acceptance score (ties: lower objective,
// then lower member index). The incumbent may worsen; the best-so-far cannot.
inline RunTrace run_sa(const Instance& instance, const SAParams& params, std::uint64_t seed) {
    params.validate();
    const auto t_start = std::chrono::steady_clock::now();
    Rng rng(seed);

    detail::WorkingSolution incumbent = detail::random_feasible_working(instance, rng);
    detail::WorkingSolution candidate(instance);
    detail::WorkingSolution selected(instance);
    detail::WorkingSolution best(instance);
    best.assign_from(incumbent);

    RunTrace trace;
    trace.algorithm = "sa";
    trace.seed = seed;
    trace.best_values.push_back(best.objective());

    double temperature = params.initial_temperature > 0.0
                             ? params.initial_temperature
                             : static_cast<double>(std::max<Duration>(
                                   1, instance.base_time_T() + instance.penalty_Q()));

    for (std::int64_t iter = 1; iter <= params.iterations; ++iter) {
        double best_score = -1.0;
        Duration selected_obj = 0;
        bool have_selection = false;
        for (std::int32_t k = 0; k < params.population_size; ++k) {
            candidate.assign_from(incumbent);
            candidate.random_walk(rng.uniform_int(1, params.neighborhood_radius), rng);
            const Duration delta = candidate.objective() - incumbent.objective();
            const double score =
                sa_accept_probability(static_cast<double>(delta), temperature, params.divisor_M);
            if (candidate.objective() < best.objective()) best.assign_from(candidate);
            if (!have_selection || score > best_score ||
                (score == best_score && candidate.objective() < selected_obj)) {
                have_selection = true;
                best_score = score;
                selected_obj = candidate.objective();
                selected.assign_from(candidate);
            }
        }
        incumbent.assign_from(selected);
        temperature *= params.cooling_factor;
        trace.best_values.push_back(best.objective());
    }

    trace.best_solution = best.to_solution();
    trace.best_value = best.objective();
    trace.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return trace;
}

}  // namespace stowage
