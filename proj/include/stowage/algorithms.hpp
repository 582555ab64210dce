#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "stowage/lca.hpp"
#include "stowage/model.hpp"
#include "stowage/sa.hpp"
#include "stowage/trace.hpp"
#include "stowage/two_phase.hpp"

namespace stowage {

using ParamMap = std::map<std::string, std::string>;

inline constexpr std::array<const char*, 5> kAlgorithmTags = {"sa", "ts", "lca", "vea", "mva"};

inline bool is_algorithm_tag(const std::string& tag) {
    for (const char* t : kAlgorithmTags)
        if (tag == t) return true;
    return false;
}

namespace detail {

inline std::int64_t param_int(const ParamMap& params, const std::string& key,
                              std::int64_t fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ValidationError("param '" + key + "': expected an integer, got '" + it->second + "'");
    }
}

inline double param_real(const ParamMap& params, const std::string& key, double fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ValidationError("param '" + key + "': expected a number, got '" + it->second + "'");
    }
}

inline void reject_unknown_keys(const ParamMap& params,
                                std::initializer_list<const char*> known) {
    for (const auto& [key, value] : params) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) {
                ok = true;
                break;
            }
        if (!ok) throw ValidationError("unknown param '" + key + "'");
    }
}

}  // namespace detail

inline SAParams resolve_sa_params(const Instance& inst, const ParamMap& params,
                                  std::int64_t iterations_override = -1) {
    detail::reject_unknown_keys(params,
                                {"population", "iterations", "M", "t0", "cooling", "radius"});
    SAParams p = SAParams::defaults(inst);
    p.population_size =
        static_cast<std::int32_t>(detail::param_int(params, "population", p.population_size));
    p.iterations = detail::param_int(params, "iterations", p.iterations);
    p.divisor_M = detail::param_real(params, "M", p.divisor_M);
    p.initial_temperature = detail::param_real(params, "t0", p.initial_temperature);
    p.cooling_factor = detail::param_real(params, "cooling", p.cooling_factor);
    p.neighborhood_radius = detail::param_int(params, "radius", p.neighborhood_radius);
    if (iterations_override >= 0) p.iterations = iterations_override;
    return p;
}

inline TSParams resolve_ts_params(const Instance& inst, const ParamMap& params,
                                  std::int64_t iterations_override = -1) {
    detail::reject_unknown_keys(
        params, {"population", "iterations", "tenure", "rand_bound", "max_radius"});
    TSParams p = TSParams::defaults(inst);
    p.population_size =
        static_cast<std::int32_t>(detail::param_int(params, "population", p.population_size));
    p.outer_iterations = detail::param_int(params, "iterations", p.outer_iterations);
    p.tabu_tenure = detail::param_int(params, "tenure", p.tabu_tenure);
    p.rand_bound = detail::param_int(params, "rand_bound", p.rand_bound);
    p.max_radius = detail::param_int(params, "max_radius", p.max_radius);
    if (iterations_override >= 0) p.outer_iterations = iterations_override;
    return p;
}

inline LCAParams resolve_lca_params(const Instance& inst, const ParamMap& params,
                                    std::int64_t iterations_override = -1) {
    detail::reject_unknown_keys(params, {"population", "iterations", "alpha"});
    LCAParams p = LCAParams::defaults(inst);
    p.population_size =
        static_cast<std::int32_t>(detail::param_int(params, "population", p.population_size));
    p.iterations = detail::param_int(params, "iterations", p.iterations);
    p.alpha = detail::param_int(params, "alpha", p.alpha);
    if (iterations_override >= 0) p.iterations = iterations_override;
    return p;
}

inline VEAParams resolve_vea_params(const Instance& inst, const ParamMap& params,
                                    std::int64_t iterations_override = -1) {
    detail::reject_unknown_keys(params,
                                {"population", "iterations", "rand_bound", "max_radius"});
    VEAParams p = VEAParams::defaults(inst);
    p.population_size =
        static_cast<std::int32_t>(detail::param_int(params, "population", p.population_size));
    p.outer_iterations = detail::param_int(params, "iterations", p.outer_iterations);
    p.rand_bound = detail::param_int(params, "rand_bound", p.rand_bound);
    p.max_radius = detail::param_int(params, "max_radius", p.max_radius);
    if (iterations_override >= 0) p.outer_iterations = iterations_override;
    return p;
}

inline MVAParams resolve_mva_params(const Instance& inst, const ParamMap& params,
                                    std::int64_t iterations_override = -1) {
    detail::reject_unknown_keys(params,
                                {"universes", "next_population", "iterations", "max_radius"});
    MVAParams p = MVAParams::defaults(inst);
    p.universe_count =
        static_cast<std::int32_t>(detail::param_int(params, "universes", p.universe_count));
    p.next_population_size = static_cast<std::int32_t>(
        detail::param_int(params, "next_population", p.next_population_size));
    p.outer_iterations = detail::param_int(params, "iterations", p.outer_iterations);
    p.max_radius = detail::param_int(params, "max_radius", p.max_radius);
    if (iterations_override >= 0) p.outer_iterations = iterations_override;
    return p;
}

// Runs the named algorithm with defaults resolved from the instance plus any
// key=value overrides. Throws ValidationError for unknown tags/keys.
inline RunTrace run_algorithm(const std::string& tag, const Instance& instance,
                              const ParamMap& params, std::int64_t iterations_override,
                              std::uint64_t seed) {
    if (tag == "sa") return run_sa(instance, resolve_sa_params(instance, params, iterations_override), seed);
    if (tag == "ts") return run_ts(instance, resolve_ts_params(instance, params, iterations_override), seed);
    if (tag == "lca") return run_lca(instance, resolve_lca_params(instance, params, iterations_override), seed);
    if (tag == "vea") return run_vea(instance, resolve_vea_params(instance, params, iterations_override), seed);
    if (tag == "mva") return run_mva(instance, resolve_mva_params(instance, params, iterations_override), seed);
    throw ValidationError("unknown algorithm '" + tag + "' (expected sa, ts, lca, vea or mva)");
}

}  // namespace stowage
