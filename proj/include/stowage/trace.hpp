#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stowage/model.hpp"

namespace stowage {

// Per-run record: the best-so-far objective after each outer iteration
// (entry 0 is the initial solution), the final best assignment and timing.
struct RunTrace {
    std::string algorithm;
    std::uint64_t seed = 0;
    std::vector<Duration> best_values;
    Solution best_solution;
    Duration best_value = 0;
    double wall_seconds = 0.0;

    Duration initial_value() const { return best_values.front(); }

    // Best-so-far after `iteration` outer iterations, clamped to the run length.
    Duration value_at(std::size_t iteration) const {
        if (best_values.empty()) return 0;
        if (iteration >= best_values.size()) iteration = best_values.size() - 1;
        return best_values[iteration];
    }

    std::string to_csv() const {
        std::string out = "iteration,best_value\n";
        for (std::size_t i = 0; i < best_values.size(); ++i) {
            out += std::to_string(i);
            out += ',';
            out += std::to_string(best_values[i]);
            out += '\n';
        }
        return out;
    }
};

}  // namespace stowage
