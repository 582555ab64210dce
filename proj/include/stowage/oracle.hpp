#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "stowage/model.hpp"

namespace stowage {

struct OracleResult {
    Duration optimal_value = 0;
    Solution optimal_solution;
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::int32_t kOracleMaxCargos = 8;
inline constexpr std::int32_t kOracleMaxCells = 12;

// Exhaustive enumeration of all injective cargo->usable-cell assignments,
// filtered by the deck weight limits. Ties resolve to the lexicographically
// smallest assignment (cargos in id order, cells in id order). Desk-scale
// only: guarded at k <= 8 and usable cells <= 12.
inline OracleResult brute_force_optimal(const Instance& instance) {
    const std::int32_t k = instance.cargo_count();
    const std::int32_t cells = instance.usable_count();
    if (k > kOracleMaxCargos || cells > kOracleMaxCells)
        throw GuardError("brute force guard exceeded: k=" + std::to_string(k) + " (max " +
                         std::to_string(kOracleMaxCargos) + "), usable cells=" +
                         std::to_string(cells) + " (max " + std::to_string(kOracleMaxCells) + ")");

    const std::vector<std::int32_t>& usable = instance.usable_cell_ids();
    OracleResult result;
    result.optimal_value = std::numeric_limits<Duration>::max();

    std::vector<bool> taken(usable.size(), false);
    std::vector<Mass> load(instance.deck_count(), 0);
    Solution current(k);

    auto dfs = [&](auto&& self, std::int32_t cargo, Duration cost) -> void {
        ++result.nodes_explored;
        if (cargo == k) {
            if (cost < result.optimal_value) {
                result.optimal_value = cost;
                result.optimal_solution = current;
            }
            return;
        }
        const Mass w = instance.cargos()[cargo].weight;
        for (std::size_t s = 0; s < usable.size(); ++s) {
            if (taken[s]) continue;
            const std::int32_t j = usable[s];
            const std::int32_t p = instance.deck_of_cell(j);
            if (load[p - 1] + w > instance.decks()[p - 1].weight_limit) continue;
            taken[s] = true;
            load[p - 1] += w;
            current.cell_of_cargo[cargo] = j;
            self(self, cargo + 1, cost + instance.handling_time(cargo, j));
            taken[s] = false;
            load[p - 1] -= w;
            current.cell_of_cargo[cargo] = Solution::kUnassigned;
        }
    };
    dfs(dfs, 0, 0);

    if (result.optimal_value == std::numeric_limits<Duration>::max())
        throw InfeasibleError("no feasible assignment exists for instance '" + instance.name() +
                              "'");
    return result;
}

namespace detail {

// Potentials-based assignment solver for a rectangular cost matrix with
// rows <= cols. cost[i][j], returns the minimal total cost of assigning every
// row to a distinct column.
inline std::int64_t min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
    const std::int32_t n = static_cast<std::int32_t>(cost.size());
    if (n == 0) return 0;
    const std::int32_t m = static_cast<std::int32_t>(cost[0].size());
    const std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

    std::vector<std::int64_t> u(n + 1, 0), v(m + 1, 0);
    std::vector<std::int32_t> match(m + 1, 0), way(m + 1, 0);
    for (std::int32_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::int32_t j0 = 0;
        std::vector<std::int64_t> minv(m + 1, kInf);
        std::vector<bool> used(m + 1, false);
        do {
            used[j0] = true;
            const std::int32_t i0 = match[j0];
            std::int64_t delta = kInf;
            std::int32_t j1 = 0;
            for (std::int32_t j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::int32_t j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::int32_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::int64_t total = 0;
    for (std::int32_t j = 1; j <= m; ++j)
        if (match[j] != 0) total += cost[match[j] - 1][j - 1];
    return total;
}

}  // namespace detail

// Optimal value of the assignment relaxation (deck weight limits dropped):
// a polynomial matching on the k x usable-cells handling-time matrix. Always
// a valid lower bound on the constrained optimum, and at least k*T.
inline Duration assignment_lower_bound(const Instance& instance) {
    const std::int32_t k = instance.cargo_count();
    if (k == 0) return 0;
    const std::vector<std::int32_t>& usable = instance.usable_cell_ids();
    std::vector<std::vector<std::int64_t>> cost(k, std::vector<std::int64_t>(usable.size()));
    for (std::int32_t i = 0; i < k; ++i)
        for (std::size_t s = 0; s < usable.size(); ++s)
            cost[i][s] = instance.handling_time(i, usable[s]);
    return detail::min_cost_assignment(cost);
}

// Writes the instance as a CPLEX-style LP text model so an external exact
// solver can cross-check: binary x_<cargo>_<cell> placement variables over
// usable cells, y_<cargo>_<deck> deck indicators with linking equalities.
inline void write_lp_model(const Instance& instance, std::ostream& os) {
    const std::vector<std::int32_t>& usable = instance.usable_cell_ids();
    auto xname = [&](std::int32_t i, std::int32_t j) {
        return "x_" + std::to_string(instance.cargo_id_at(i)) + "_" + std::to_string(j);
    };
    auto yname = [&](std::int32_t i, std::int32_t p) {
        return "y_" + std::to_string(instance.cargo_id_at(i)) + "_" + std::to_string(p);
    };

    os << "\\ stowage assignment model: " << instance.name() << "\n";
    os << "\\ " << instance.cargo_count() << " cargos, " << usable.size()
       << " usable cells, " << instance.deck_count() << " decks, T="
       << instance.base_time_T() << ", Q=" << instance.penalty_Q() << "\n";
    os << "Minimize\n obj:";
    int terms = 0;
    for (std::int32_t i = 0; i < instance.cargo_count(); ++i) {
        for (std::int32_t j : usable) {
            os << (terms ? " + " : " ") << instance.handling_time(i, j) << " " << xname(i, j);
            if (++terms % 8 == 0) os << "\n   ";
        }
    }
    os << "\nSubject To\n";
    for (std::int32_t i = 0; i < instance.cargo_count(); ++i) {
        os << " cargo_" << instance.cargo_id_at(i) << ":";
        terms = 0;
        for (std::int32_t j : usable) {
            os << (terms ? " + " : " ") << xname(i, j);
            if (++terms % 8 == 0) os << "\n   ";
        }
        os << " = 1\n";
    }
    for (std::int32_t j : usable) {
        os << " cell_" << j << ":";
        terms = 0;
        for (std::int32_t i = 0; i < instance.cargo_count(); ++i) {
            os << (terms ? " + " : " ") << xname(i, j);
            if (++terms % 8 == 0) os << "\n   ";
        }
        os << " <= 1\n";
    }
    for (const Deck& d : instance.decks()) {
        os << " deck_" << d.index << ":";
        terms = 0;
        for (std::int32_t i = 0; i < instance.cargo_count(); ++i) {
            os << (terms ? " + " : " ") << instance.cargos()[i].weight << " " << yname(i, d.index);
            if (++terms % 8 == 0) os << "\n   ";
        }
        os << " <= " << d.weight_limit << "\n";
    }
    for (std::int32_t i = 0; i < instance.cargo_count(); ++i) {
        for (const Deck& d : instance.decks()) {
            os << " link_" << instance.cargo_id_at(i) << "_" << d.index << ": "
               << yname(i, d.index);
            terms = 0;
            for (std::int32_t j : usable) {
                if (instance.deck_of_cell(j) != d.index) continue;
                os << " - " << xname(i, j);
                if (++terms % 8 == 0) os << "\n   ";
            }
            os << " = 0\n";
        }
    }
    os << "Binary\n";
    terms = 0;
    for (std::int32_t i = 0; i < instance.cargo_count(); ++i) {
        for (std::int32_t j : usable) {
            os << " " << xname(i, j);
            if (++terms % 10 == 0) os << "\n";
        }
    }
    for (std::int32_t i = 0; i < instance.cargo_count(); ++i) {
        for (const Deck& d : instance.decks()) {
            os << " " << yname(i, d.index);
            if (++terms % 10 == 0) os << "\n";
        }
    }
    os << "\nEnd\n";
}

}  // namespace stowage
