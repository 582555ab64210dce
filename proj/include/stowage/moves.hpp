#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stowage/model.hpp"
#include "stowage/rng.hpp"

namespace stowage {

// Discrete neighborhood: swap the cells of two cargos, or relocate one cargo
// to an empty usable cell. Public moves speak cargo ids / cell ids.
struct Move {
    enum class Kind { Swap, Relocate };

    Kind kind = Kind::Swap;
    std::int64_t cargo_a = 0;
    std::int64_t cargo_b = 0;        // swap only
    std::int32_t target_cell = -1;   // relocate only

    static Move swap(std::int64_t a, std::int64_t b) {
        Move m;
        m.kind = Kind::Swap;
        m.cargo_a = a;
        m.cargo_b = b;
        return m;
    }
    static Move relocate(std::int64_t cargo, std::int32_t cell) {
        Move m;
        m.kind = Kind::Relocate;
        m.cargo_a = cargo;
        m.target_cell = cell;
        return m;
    }
};

namespace detail {

inline void require_applicable(const Solution& s, const Move& m, const Instance& inst,
                               std::int32_t& ai, std::int32_t& bi) {
    ai = inst.cargo_index(m.cargo_a);
    if (s.size() != static_cast<std::size_t>(inst.cargo_count()))
        throw std::invalid_argument("solution/instance cargo count mismatch");
    if (s.cell_of_cargo[ai] == Solution::kUnassigned)
        throw std::invalid_argument("cargo " + std::to_string(m.cargo_a) + " is unassigned");
    if (m.kind == Move::Kind::Swap) {
        if (m.cargo_a == m.cargo_b)
            throw std::invalid_argument("swap endpoints must be distinct");
        bi = inst.cargo_index(m.cargo_b);
        if (s.cell_of_cargo[bi] == Solution::kUnassigned)
            throw std::invalid_argument("cargo " + std::to_string(m.cargo_b) + " is unassigned");
    } else {
        bi = -1;
        if (!inst.valid_cell_id(m.target_cell))
            throw std::invalid_argument("unknown target cell " + std::to_string(m.target_cell));
        if (!inst.cells()[m.target_cell].usable)
            throw std::invalid_argument("target cell " + std::to_string(m.target_cell) +
                                        " is not usable");
        for (std::int32_t c : s.cell_of_cargo)
            if (c == m.target_cell)
                throw std::invalid_argument("target cell " + std::to_string(m.target_cell) +
                                            " is occupied");
    }
}

}  // namespace detail

// Objective change of applying the move, computed without re-evaluating the
// whole assignment. Throws std::invalid_argument on inapplicable moves.
inline Duration delta_objective(const Solution& solution, const Move& move,
                                const Instance& instance) {
    std::int32_t ai, bi;
    detail::require_applicable(solution, move, instance, ai, bi);
    const std::int32_t ca = solution.cell_of_cargo[ai];
    if (move.kind == Move::Kind::Swap) {
        const std::int32_t cb = solution.cell_of_cargo[bi];
        return instance.handling_time(ai, cb) + instance.handling_time(bi, ca) -
               instance.handling_time(ai, ca) - instance.handling_time(bi, cb);
    }
    return instance.handling_time(ai, move.target_cell) - instance.handling_time(ai, ca);
}

inline Solution apply_move(const Solution& solution, const Move& move, const Instance& instance) {
    std::int32_t ai, bi;
    detail::require_applicable(solution, move, instance, ai, bi);
    Solution out = solution;
    if (move.kind == Move::Kind::Swap)
        std::swap(out.cell_of_cargo[ai], out.cell_of_cargo[bi]);
    else
        out.cell_of_cargo[ai] = move.target_cell;
    return out;
}

namespace detail {

// Fraction of sampled moves that aim at fixing a category mismatch instead of
// being drawn uniformly. Keeps full support over the neighborhood while giving
// the searches enough pull to close out the endgame.
inline constexpr double kGuidedMoveProbability = 0.6;

// Retry budget when a sampled move breaks a deck weight limit (or is tabu).
inline constexpr int kMoveRetries = 50;

// Index-based move used inside the search loops.
struct FastMove {
    bool is_swap = true;
    std::int32_t cargo_a = 0;  // cargo indices, not ids
    std::int32_t cargo_b = 0;
    std::int32_t from_cell = -1;
    std::int32_t to_cell = -1;  // relocate target
};

// Tabu keys pack (kind, x, y) into one word; swap keys are normalized.
inline std::uint64_t swap_key(std::int32_t a, std::int32_t b) {
    if (a > b) std::swap(a, b);
    return (0ULL << 62) | (static_cast<std::uint64_t>(a) << 31) | static_cast<std::uint64_t>(b);
}
inline std::uint64_t relocate_key(std::int32_t cargo, std::int32_t to_cell) {
    return (1ULL << 62) | (static_cast<std::uint64_t>(cargo) << 31) |
           static_cast<std::uint64_t>(to_cell);
}
inline std::uint64_t key_of(const FastMove& m) {
    return m.is_swap ? swap_key(m.cargo_a, m.cargo_b) : relocate_key(m.cargo_a, m.to_cell);
}
// Key that undoes the move: swaps are self-inverse, a relocate is undone by
// relocating the cargo back to its origin cell.
inline std::uint64_t inverse_key_of(const FastMove& m) {
    return m.is_swap ? swap_key(m.cargo_a, m.cargo_b) : relocate_key(m.cargo_a, m.from_cell);
}

// Mutable assignment state with O(1) move application: occupancy, deck loads,
// running objective and the list of category-mismatched cargos.
class WorkingSolution {
public:
    explicit WorkingSolution(const Instance& inst) : inst_(&inst) { reset_empty(); }

    WorkingSolution(const Instance& inst, const Solution& s) : inst_(&inst) {
        load(s);
    }

    const Instance& instance() const { return *inst_; }
    Duration objective() const { return objective_; }
    std::int32_t cell_of(std::int32_t cargo_idx) const { return cell_of_cargo_[cargo_idx]; }
    std::int32_t occupant_of(std::int32_t cell_id) const { return occupant_[cell_id]; }
    Mass deck_load(std::int32_t deck_index) const { return deck_load_[deck_index - 1]; }
    std::size_t empty_count() const { return empty_cells_.size(); }
    std::size_t mismatch_count() const { return mismatched_.size(); }

    void reset_empty() {
        const Instance& inst = *inst_;
        cell_of_cargo_.assign(inst.cargo_count(), Solution::kUnassigned);
        occupant_.assign(inst.cell_count(), -1);
        deck_load_.assign(inst.deck_count(), 0);
        objective_ = 0;
        empty_cells_ = inst.usable_cell_ids();
        empty_pos_.assign(inst.cell_count(), -1);
        for (std::size_t i = 0; i < empty_cells_.size(); ++i)
            empty_pos_[empty_cells_[i]] = static_cast<std::int32_t>(i);
        mismatched_.clear();
        mismatch_pos_.assign(inst.cargo_count(), -1);
    }

    // Adopt a (feasible, total) assignment.
    void load(const Solution& s) {
        reset_empty();
        for (std::int32_t i = 0; i < inst_->cargo_count(); ++i) {
            const std::int32_t j = s.cell_of_cargo[i];
            if (j == Solution::kUnassigned)
                throw std::invalid_argument("working solution requires a total assignment");
            place(i, j);
        }
    }

    void assign_from(const WorkingSolution& other) {
        inst_ = other.inst_;
        cell_of_cargo_ = other.cell_of_cargo_;
        occupant_ = other.occupant_;
        deck_load_ = other.deck_load_;
        objective_ = other.objective_;
        empty_cells_ = other.empty_cells_;
        empty_pos_ = other.empty_pos_;
        mismatched_ = other.mismatched_;
        mismatch_pos_ = other.mismatch_pos_;
    }

    Solution to_solution() const {
        Solution s;
        s.cell_of_cargo = cell_of_cargo_;
        return s;
    }

    // Used while constructing an initial assignment.
    void place(std::int32_t cargo_idx, std::int32_t cell_id) {
        cell_of_cargo_[cargo_idx] = cell_id;
        occupant_[cell_id] = cargo_idx;
        remove_empty(cell_id);
        deck_load_[inst_->deck_of_cell(cell_id) - 1] += inst_->cargos()[cargo_idx].weight;
        objective_ += inst_->handling_time(cargo_idx, cell_id);
        if (!inst_->category_match(cargo_idx, cell_id)) add_mismatch(cargo_idx);
    }

    Duration delta_of(const FastMove& m) const {
        const Instance& inst = *inst_;
        if (m.is_swap) {
            const std::int32_t ca = cell_of_cargo_[m.cargo_a];
            const std::int32_t cb = cell_of_cargo_[m.cargo_b];
            return inst.handling_time(m.cargo_a, cb) + inst.handling_time(m.cargo_b, ca) -
                   inst.handling_time(m.cargo_a, ca) - inst.handling_time(m.cargo_b, cb);
        }
        return inst.handling_time(m.cargo_a, m.to_cell) -
               inst.handling_time(m.cargo_a, m.from_cell);
    }

    // Deck weight limits stay satisfied after the move.
    bool deck_feasible(const FastMove& m) const {
        const Instance& inst = *inst_;
        if (m.is_swap) {
            const std::int32_t da = inst.deck_of_cell(cell_of_cargo_[m.cargo_a]);
            const std::int32_t db = inst.deck_of_cell(cell_of_cargo_[m.cargo_b]);
            if (da == db) return true;
            const Mass wa = inst.cargos()[m.cargo_a].weight;
            const Mass wb = inst.cargos()[m.cargo_b].weight;
            return deck_load_[da - 1] - wa + wb <= inst.decks()[da - 1].weight_limit &&
                   deck_load_[db - 1] - wb + wa <= inst.decks()[db - 1].weight_limit;
        }
        const std::int32_t df = inst.deck_of_cell(m.from_cell);
        const std::int32_t dt = inst.deck_of_cell(m.to_cell);
        if (df == dt) return true;
        const Mass w = inst.cargos()[m.cargo_a].weight;
        return deck_load_[dt - 1] + w <= inst.decks()[dt - 1].weight_limit;
    }

    void apply(const FastMove& m) {
        const Instance& inst = *inst_;
        objective_ += delta_of(m);
        if (m.is_swap) {
            const std::int32_t ca = cell_of_cargo_[m.cargo_a];
            const std::int32_t cb = cell_of_cargo_[m.cargo_b];
            const std::int32_t da = inst.deck_of_cell(ca), db = inst.deck_of_cell(cb);
            if (da != db) {
                const Mass wa = inst.cargos()[m.cargo_a].weight;
                const Mass wb = inst.cargos()[m.cargo_b].weight;
                deck_load_[da - 1] += wb - wa;
                deck_load_[db - 1] += wa - wb;
            }
            cell_of_cargo_[m.cargo_a] = cb;
            cell_of_cargo_[m.cargo_b] = ca;
            occupant_[ca] = m.cargo_b;
            occupant_[cb] = m.cargo_a;
            refresh_mismatch(m.cargo_a);
            refresh_mismatch(m.cargo_b);
        } else {
            const std::int32_t df = inst.deck_of_cell(m.from_cell);
            const std::int32_t dt = inst.deck_of_cell(m.to_cell);
            if (df != dt) {
                const Mass w = inst.cargos()[m.cargo_a].weight;
                deck_load_[df - 1] -= w;
                deck_load_[dt - 1] += w;
            }
            cell_of_cargo_[m.cargo_a] = m.to_cell;
            occupant_[m.from_cell] = -1;
            occupant_[m.to_cell] = m.cargo_a;
            remove_empty(m.to_cell);
            add_empty(m.from_cell);
            refresh_mismatch(m.cargo_a);
        }
    }

    // Uniform draw over the applicable move kinds: a random cargo pair swap or
    // a random cargo relocated to a random empty usable cell.
    std::optional<FastMove> sample_uniform(Rng& rng) const {
        const std::int32_t k = inst_->cargo_count();
        const bool can_swap = k >= 2;
        const bool can_relocate = k >= 1 && !empty_cells_.empty();
        if (!can_swap && !can_relocate) return std::nullopt;
        bool swap_kind = can_swap;
        if (can_swap && can_relocate) swap_kind = rng.coin(0.5);
        FastMove m;
        if (swap_kind) {
            m.is_swap = true;
            m.cargo_a = static_cast<std::int32_t>(rng.index(k));
            m.cargo_b = static_cast<std::int32_t>(rng.index(k - 1));
            if (m.cargo_b >= m.cargo_a) ++m.cargo_b;
        } else {
            m.is_swap = false;
            m.cargo_a = static_cast<std::int32_t>(rng.index(k));
            m.from_cell = cell_of_cargo_[m.cargo_a];
            m.to_cell = empty_cells_[rng.index(empty_cells_.size())];
        }
        return m;
    }

    // Pick a mismatched cargo and steer it toward a cell of its own category
    // (relocate if that cell is empty, swap with its occupant otherwise).
    // Falls back to the uniform draw when no mismatch exists or the target
    // collapses.
    std::optional<FastMove> sample_guided(Rng& rng) const {
        if (mismatched_.empty()) return sample_uniform(rng);
        const std::int32_t a = mismatched_[rng.index(mismatched_.size())];
        const auto& homes = inst_->usable_cells_of_category(inst_->cargo_category(a));
        if (homes.empty()) return sample_uniform(rng);
        // a is mismatched, so its own cell is never in homes
        const std::int32_t c = homes[rng.index(homes.size())];
        FastMove m;
        if (occupant_[c] < 0) {
            m.is_swap = false;
            m.cargo_a = a;
            m.from_cell = cell_of_cargo_[a];
            m.to_cell = c;
        } else {
            m.is_swap = true;
            m.cargo_a = a;
            m.cargo_b = occupant_[c];
        }
        return m;
    }

    // One randomized feasibility-preserving step. Resamples up to kMoveRetries
    // times when a draw breaks a deck limit or `blocked` rejects it; returns
    // the applied move, or nothing if every attempt failed.
    template <typename BlockedFn>
    std::optional<FastMove> random_step(Rng& rng, BlockedFn&& blocked) {
        for (int attempt = 0; attempt < kMoveRetries; ++attempt) {
            std::optional<FastMove> m = rng.coin(kGuidedMoveProbability)
                                            ? sample_guided(rng)
                                            : sample_uniform(rng);
            if (!m) return std::nullopt;
            if (!deck_feasible(*m)) continue;
            if (blocked(*m)) continue;
            apply(*m);
            return m;
        }
        return std::nullopt;
    }

    std::optional<FastMove> random_step(Rng& rng) {
        return random_step(rng, [](const FastMove&) { return false; });
    }

    // `count` randomized steps; steps that find no admissible move are skipped.
    void random_walk(std::int64_t count, Rng& rng) {
        for (std::int64_t i = 0; i < count; ++i)
            if (!random_step(rng)) break;
    }

private:
    void remove_empty(std::int32_t cell_id) {
        const std::int32_t pos = empty_pos_[cell_id];
        if (pos < 0) return;
        const std::int32_t last = empty_cells_.back();
        empty_cells_[pos] = last;
        empty_pos_[last] = pos;
        empty_cells_.pop_back();
        empty_pos_[cell_id] = -1;
    }
    void add_empty(std::int32_t cell_id) {
        empty_pos_[cell_id] = static_cast<std::int32_t>(empty_cells_.size());
        empty_cells_.push_back(cell_id);
    }
    void add_mismatch(std::int32_t cargo_idx) {
        if (mismatch_pos_[cargo_idx] >= 0) return;
        mismatch_pos_[cargo_idx] = static_cast<std::int32_t>(mismatched_.size());
        mismatched_.push_back(cargo_idx);
    }
    void drop_mismatch(std::int32_t cargo_idx) {
        const std::int32_t pos = mismatch_pos_[cargo_idx];
        if (pos < 0) return;
        const std::int32_t last = mismatched_.back();
        mismatched_[pos] = last;
        mismatch_pos_[last] = pos;
        mismatched_.pop_back();
        mismatch_pos_[cargo_idx] = -1;
    }
    void refresh_mismatch(std::int32_t cargo_idx) {
        if (inst_->category_match(cargo_idx, cell_of_cargo_[cargo_idx]))
            drop_mismatch(cargo_idx);
        else
            add_mismatch(cargo_idx);
    }

    const Instance* inst_;
    std::vector<std::int32_t> cell_of_cargo_;
    std::vector<std::int32_t> occupant_;
    std::vector<Mass> deck_load_;
    Duration objective_ = 0;
    std::vector<std::int32_t> empty_cells_;
    std::vector<std::int32_t> empty_pos_;
    std::vector<std::int32_t> mismatched_;
    std::vector<std::int32_t> mismatch_pos_;
};

// Randomized greedy construction: cargos in random order, each placed on a
// random empty usable cell whose deck still has capacity.
inline bool try_random_feasible(WorkingSolution& ws, Rng& rng) {
    const Instance& inst = ws.instance();
    ws.reset_empty();
    std::vector<std::int32_t> order(inst.cargo_count());
    for (std::int32_t i = 0; i < inst.cargo_count(); ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<std::int32_t> fits;
    for (std::int32_t cargo : order) {
        const Mass w = inst.cargos()[cargo].weight;
        fits.clear();
        for (std::int32_t j : inst.usable_cell_ids()) {
            if (ws.occupant_of(j) >= 0) continue;
            const std::int32_t p = inst.deck_of_cell(j);
            if (ws.deck_load(p) + w > inst.decks()[p - 1].weight_limit) continue;
            fits.push_back(j);
        }
        if (fits.empty()) return false;
        ws.place(cargo, fits[rng.index(fits.size())]);
    }
    return true;
}

inline constexpr int kFeasibleRestarts = 100;

inline WorkingSolution random_feasible_working(const Instance& instance, Rng& rng) {
    WorkingSolution ws(instance);
    for (int attempt = 0; attempt < kFeasibleRestarts; ++attempt)
        if (try_random_feasible(ws, rng)) return ws;
    throw InfeasibleError("no feasible assignment found for instance '" + instance.name() +
                          "' within " + std::to_string(kFeasibleRestarts) + " restarts");
}

}  // namespace detail

// Random feasible total assignment, or InfeasibleError after bounded restarts.
inline Solution random_feasible_solution(const Instance& instance, Rng& rng) {
    return detail::random_feasible_working(instance, rng).to_solution();
}

// Feasibility-preserving randomized perturbation: at most `magnitude` moves
// are applied; draws that would break a deck limit are resampled, and a step
// with no admissible move degenerates to the identity.
inline Solution perturb(const Solution& solution, std::int64_t magnitude, Rng& rng,
                        const Instance& instance) {
    if (magnitude < 0 || magnitude > instance.usable_count())
        throw std::invalid_argument("perturbation magnitude " + std::to_string(magnitude) +
                                    " out of range 0.." + std::to_string(instance.usable_count()));
    detail::WorkingSolution ws(instance, solution);
    ws.random_walk(magnitude, rng);
    return ws.to_solution();
}

// `count` feasible solutions, each within `radius` moves of `center`
// (magnitude drawn uniformly from 1..radius per member; radius 0 copies).
inline std::vector<Solution> generate_population_near(const Solution& center, std::int32_t count,
                                                      std::int64_t radius, Rng& rng,
                                                      const Instance& instance) {
    std::vector<Solution> population;
    population.reserve(count);
    for (std::int32_t i = 0; i < count; ++i) {
        const std::int64_t mag = radius <= 0 ? 0 : rng.uniform_int(1, radius);
        population.push_back(perturb(center, mag, rng, instance));
    }
    return population;
}

}  // namespace stowage
