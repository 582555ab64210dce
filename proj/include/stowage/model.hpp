#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace stowage {

using Duration = std::int64_t;
using Mass = std::int64_t;

// Bad input data: schema violations, broken instance invariants, unknown ids.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The instance admits no feasible assignment (or none was found within bounds).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact-solver size guard exceeded.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Deck {
    std::int32_t index = 0;  // 1-based deck index p
    Mass weight_limit = 0;
    bool operator==(const Deck&) const = default;
};

struct Cell {
    std::int32_t id = 0;    // dense 0-based id, deck-major then row-major
    std::int32_t deck = 0;  // 1-based deck index
    std::int32_t row = 0;
    std::int32_t col = 0;
    bool usable = true;
    std::string category;
    bool operator==(const Cell&) const = default;
};

struct Cargo {
    std::int64_t id = 0;
    Mass weight = 0;
    std::string category;
    bool operator==(const Cargo&) const = default;
};

// A total or partial assignment of cargos to cells. Indexed by cargo position
// (cargos are kept sorted by id), holding a cell id or kUnassigned.
struct Solution {
    static constexpr std::int32_t kUnassigned = -1;

    std::vector<std::int32_t> cell_of_cargo;

    Solution() = default;
    explicit Solution(std::size_t cargo_count)
        : cell_of_cargo(cargo_count, kUnassigned) {}

    std::size_t size() const { return cell_of_cargo.size(); }
    bool operator==(const Solution&) const = default;
};

enum class ViolationKind {
    CellConflict,     // a cell holds more than one cargo
    CargoUnassigned,  // a cargo has no cell
    UnusableCell,     // a cargo sits on a blocked cell
    DeckOverweight,   // a deck exceeds its weight limit
};

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::CellConflict: return "CELL_CONFLICT";
        case ViolationKind::CargoUnassigned: return "CARGO_UNASSIGNED";
        case ViolationKind::UnusableCell: return "UNUSABLE_CELL";
        case ViolationKind::DeckOverweight: return "DECK_OVERWEIGHT";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::vector<std::int64_t> ids;  // offending cargo/cell/deck ids
    std::int64_t magnitude = 0;     // overload mass for DeckOverweight, count otherwise
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<Violation> violations;
};

// Immutable problem data: the ship grid (rows x cols per deck, l decks),
// the cargo list, per-deck weight limits and the handling-time parameters
// T (base) and Q (category-mismatch penalty). Cell ids are dense and
// deck-major: id = (deck-1)*rows*cols + row*cols + col.
class Instance {
public:
    Instance(std::string name, std::int32_t rows, std::int32_t cols,
             std::vector<Deck> decks, std::vector<Cell> cells,
             std::vector<Cargo> cargos, Duration base_time_T, Duration penalty_Q)
        : name_(std::move(name)),
          rows_(rows),
          cols_(cols),
          decks_(std::move(decks)),
          cells_(std::move(cells)),
          cargos_(std::move(cargos)),
          base_time_T_(base_time_T),
          penalty_Q_(penalty_Q) {
        validate_and_index();
    }

    const std::string& name() const { return name_; }
    std::int32_t rows() const { return rows_; }
    std::int32_t cols() const { return cols_; }
    std::int32_t deck_count() const { return static_cast<std::int32_t>(decks_.size()); }
    const std::vector<Deck>& decks() const { return decks_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<Cargo>& cargos() const { return cargos_; }
    Duration base_time_T() const { return base_time_T_; }
    Duration penalty_Q() const { return penalty_Q_; }

    std::int32_t cargo_count() const { return static_cast<std::int32_t>(cargos_.size()); }
    std::int32_t cell_count() const { return static_cast<std::int32_t>(cells_.size()); }
    std::int32_t usable_count() const { return static_cast<std::int32_t>(usable_cells_.size()); }
    const std::vector<std::int32_t>& usable_cell_ids() const { return usable_cells_; }

    bool valid_cell_id(std::int64_t id) const {
        return id >= 0 && id < cell_count();
    }

    // 1-based deck index of a cell, computed from the dense id layout.
    std::int32_t deck_of_cell(std::int32_t cell_id) const {
        return cell_id / (rows_ * cols_) + 1;
    }

    std::int32_t cargo_index(std::int64_t cargo_id) const {
        auto it = cargo_index_.find(cargo_id);
        if (it == cargo_index_.end())
            throw ValidationError("unknown cargo id " + std::to_string(cargo_id));
        return it->second;
    }
    std::int64_t cargo_id_at(std::int32_t idx) const { return cargos_[idx].id; }

    std::int32_t category_count() const { return static_cast<std::int32_t>(category_labels_.size()); }
    const std::string& category_label(std::int32_t cid) const { return category_labels_[cid]; }
    std::int32_t cell_category(std::int32_t cell_id) const { return cell_cat_[cell_id]; }
    std::int32_t cargo_category(std::int32_t cargo_idx) const { return cargo_cat_[cargo_idx]; }

    // Usable cells carrying the given category, in id order.
    const std::vector<std::int32_t>& usable_cells_of_category(std::int32_t cid) const {
        return usable_by_cat_[cid];
    }

    bool category_match(std::int32_t cargo_idx, std::int32_t cell_id) const {
        return cargo_cat_[cargo_idx] == cell_cat_[cell_id];
    }

    // t_ij: T on category match, T+Q otherwise.
    Duration handling_time(std::int32_t cargo_idx, std::int32_t cell_id) const {
        return category_match(cargo_idx, cell_id) ? base_time_T_ : base_time_T_ + penalty_Q_;
    }

    bool operator==(const Instance& other) const {
        return name_ == other.name_ && rows_ == other.rows_ && cols_ == other.cols_ &&
               decks_ == other.decks_ && cells_ == other.cells_ &&
               cargos_ == other.cargos_ && base_time_T_ == other.base_time_T_ &&
               penalty_Q_ == other.penalty_Q_;
    }

private:
    void validate_and_index() {
        if (rows_ < 1) throw ValidationError("rows must be >= 1");
        if (cols_ < 1) throw ValidationError("cols must be >= 1");
        if (decks_.empty()) throw ValidationError("at least one deck required");
        if (base_time_T_ < 0) throw ValidationError("base_time_T must be >= 0");
        if (penalty_Q_ < 0) throw ValidationError("penalty_Q must be >= 0");

        std::sort(decks_.begin(), decks_.end(),
                  [](const Deck& a, const Deck& b) { return a.index < b.index; });
        for (std::size_t p = 0; p < decks_.size(); ++p) {
            if (decks_[p].index != static_cast<std::int32_t>(p) + 1)
                throw ValidationError("deck indices must be exactly 1.." +
                                      std::to_string(decks_.size()) + ", got " +
                                      std::to_string(decks_[p].index));
            if (decks_[p].weight_limit < 0)
                throw ValidationError("deck " + std::to_string(decks_[p].index) +
                                      ": weight_limit must be >= 0");
        }

        const std::int64_t expected_cells =
            static_cast<std::int64_t>(rows_) * cols_ * static_cast<std::int64_t>(decks_.size());
        if (static_cast<std::int64_t>(cells_.size()) != expected_cells)
            throw ValidationError("expected " + std::to_string(expected_cells) +
                                  " cells (rows*cols*decks), got " + std::to_string(cells_.size()));

        std::sort(cells_.begin(), cells_.end(),
                  [](const Cell& a, const Cell& b) { return a.id < b.id; });
        for (std::size_t j = 0; j + 1 < cells_.size(); ++j) {
            if (cells_[j].id == cells_[j + 1].id)
                throw ValidationError("duplicate cell id " + std::to_string(cells_[j].id));
        }
        const std::int32_t per_deck = rows_ * cols_;
        for (const Cell& c : cells_) {
            if (c.id < 0 || c.id >= expected_cells)
                throw ValidationError("cell id " + std::to_string(c.id) + " out of range");
            if (c.deck < 1 || c.deck > static_cast<std::int32_t>(decks_.size()))
                throw ValidationError("cell " + std::to_string(c.id) + ": deck " +
                                      std::to_string(c.deck) + " out of range");
            if (c.row < 0 || c.row >= rows_ || c.col < 0 || c.col >= cols_)
                throw ValidationError("cell " + std::to_string(c.id) + ": row/col out of range");
            const std::int32_t want = (c.deck - 1) * per_deck + c.row * cols_ + c.col;
            if (c.id != want)
                throw ValidationError("cell " + std::to_string(c.id) +
                                      ": id does not match deck-major position (expected " +
                                      std::to_string(want) + ")");
            if (c.category.empty())
                throw ValidationError("cell " + std::to_string(c.id) + ": empty category");
        }

        std::sort(cargos_.begin(), cargos_.end(),
                  [](const Cargo& a, const Cargo& b) { return a.id < b.id; });
        for (std::size_t i = 0; i + 1 < cargos_.size(); ++i) {
            if (cargos_[i].id == cargos_[i + 1].id)
                throw ValidationError("duplicate cargo id " + std::to_string(cargos_[i].id));
        }
        for (const Cargo& c : cargos_) {
            if (c.weight < 0)
                throw ValidationError("cargo " + std::to_string(c.id) + ": weight must be >= 0");
            if (c.category.empty())
                throw ValidationError("cargo " + std::to_string(c.id) + ": empty category");
        }

        // Interned category table, sorted so equal content gives equal ids.
        std::unordered_set<std::string> seen;
        for (const Cell& c : cells_) seen.insert(c.category);
        for (const Cargo& c : cargos_) seen.insert(c.category);
        category_labels_.assign(seen.begin(), seen.end());
        std::sort(category_labels_.begin(), category_labels_.end());
        std::unordered_map<std::string, std::int32_t> cat_of;
        for (std::size_t i = 0; i < category_labels_.size(); ++i)
            cat_of[category_labels_[i]] = static_cast<std::int32_t>(i);

        cell_cat_.resize(cells_.size());
        usable_by_cat_.assign(category_labels_.size(), {});
        for (const Cell& c : cells_) {
            cell_cat_[c.id] = cat_of[c.category];
            if (c.usable) {
                usable_cells_.push_back(c.id);
                usable_by_cat_[cell_cat_[c.id]].push_back(c.id);
            }
        }
        cargo_cat_.resize(cargos_.size());
        for (std::size_t i = 0; i < cargos_.size(); ++i) {
            cargo_cat_[i] = cat_of[cargos_[i].category];
            cargo_index_[cargos_[i].id] = static_cast<std::int32_t>(i);
        }

        if (usable_count() < cargo_count())
            throw ValidationError("instance has " + std::to_string(cargo_count()) +
                                  " cargos but only " + std::to_string(usable_count()) +
                                  " usable cells");
    }

    std::string name_;
    std::int32_t rows_ = 0;
    std::int32_t cols_ = 0;
    std::vector<Deck> decks_;
    std::vector<Cell> cells_;
    std::vector<Cargo> cargos_;
    Duration base_time_T_ = 0;
    Duration penalty_Q_ = 0;

    // derived
    std::vector<std::int32_t> usable_cells_;
    std::vector<std::string> category_labels_;
    std::vector<std::int32_t> cell_cat_;
    std::vector<std::int32_t> cargo_cat_;
    std::vector<std::vector<std::int32_t>> usable_by_cat_;
    std::unordered_map<std::int64_t, std::int32_t> cargo_index_;
};

// t_ij of the time rule: T when cargo and cell share a category, T+Q otherwise.
inline Duration unload_time(const Cargo& cargo, const Cell& cell, const Instance& instance) {
    return cargo.category == cell.category ? instance.base_time_T()
                                           : instance.base_time_T() + instance.penalty_Q();
}

namespace detail {

// Throws unless the solution is total, injective and refers to known cells.
inline void require_well_formed(const Solution& s, const Instance& inst) {
    if (s.size() != static_cast<std::size_t>(inst.cargo_count()))
        throw std::invalid_argument("solution covers " + std::to_string(s.size()) +
                                    " cargos, instance has " +
                                    std::to_string(inst.cargo_count()));
    std::vector<bool> used(inst.cell_count(), false);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::int32_t j = s.cell_of_cargo[i];
        if (j == Solution::kUnassigned)
            throw std::invalid_argument("cargo " + std::to_string(inst.cargo_id_at(
                                            static_cast<std::int32_t>(i))) + " is unassigned");
        if (!inst.valid_cell_id(j))
            throw ValidationError("unknown cell id " + std::to_string(j));
        if (used[j])
            throw std::invalid_argument("cell " + std::to_string(j) +
                                        " assigned to more than one cargo");
        used[j] = true;
    }
}

}  // namespace detail

// Total unloading time of a complete assignment. Exact integer arithmetic.
inline Duration evaluate_objective(const Solution& solution, const Instance& instance) {
    detail::require_well_formed(solution, instance);
    Duration total = 0;
    for (std::int32_t i = 0; i < instance.cargo_count(); ++i)
        total += instance.handling_time(i, solution.cell_of_cargo[i]);
    return total;
}

// Total weight of cargos whose assigned cell lies on the given deck.
inline Mass deck_load(const Solution& solution, const Deck& deck, const Instance& instance) {
    if (deck.index < 1 || deck.index > instance.deck_count())
        throw std::invalid_argument("deck " + std::to_string(deck.index) +
                                    " does not belong to the instance");
    if (solution.size() != static_cast<std::size_t>(instance.cargo_count()))
        throw std::invalid_argument("solution/instance cargo count mismatch");
    Mass load = 0;
    for (std::size_t i = 0; i < solution.size(); ++i) {
        const std::int32_t j = solution.cell_of_cargo[i];
        if (j == Solution::kUnassigned) continue;
        if (!instance.valid_cell_id(j))
            throw ValidationError("unknown cell id " + std::to_string(j));
        if (instance.deck_of_cell(j) == deck.index)
            load += instance.cargos()[i].weight;
    }
    return load;
}

// Checks every placement and weight constraint and reports each violation.
// Accepts partial/broken assignments; throws only on unknown ids.
inline FeasibilityReport check_feasibility(const Solution& solution, const Instance& instance) {
    if (solution.size() != static_cast<std::size_t>(instance.cargo_count()))
        throw ValidationError("solution covers " + std::to_string(solution.size()) +
                              " cargos, instance has " + std::to_string(instance.cargo_count()));
    FeasibilityReport report;
    std::vector<std::vector<std::int32_t>> on_cell(instance.cell_count());
    for (std::size_t i = 0; i < solution.size(); ++i) {
        const std::int32_t idx = static_cast<std::int32_t>(i);
        const std::int32_t j = solution.cell_of_cargo[i];
        if (j == Solution::kUnassigned) {
            report.violations.push_back(
                {ViolationKind::CargoUnassigned, {instance.cargo_id_at(idx)}, 1});
            continue;
        }
        if (!instance.valid_cell_id(j))
            throw ValidationError("unknown cell id " + std::to_string(j));
        if (!instance.cells()[j].usable)
            report.violations.push_back(
                {ViolationKind::UnusableCell, {instance.cargo_id_at(idx), j}, 1});
        on_cell[j].push_back(idx);
    }
    for (std::int32_t j = 0; j < instance.cell_count(); ++j) {
        if (on_cell[j].size() > 1) {
            Violation v{ViolationKind::CellConflict, {j}, 0};
            for (std::int32_t idx : on_cell[j]) v.ids.push_back(instance.cargo_id_at(idx));
            v.magnitude = static_cast<std::int64_t>(on_cell[j].size()) - 1;
            report.violations.push_back(std::move(v));
        }
    }
    for (const Deck& d : instance.decks()) {
        const Mass load = deck_load(solution, d, instance);
        if (load > d.weight_limit)
            report.violations.push_back(
                {ViolationKind::DeckOverweight, {d.index}, load - d.weight_limit});
    }
    report.feasible = report.violations.empty();
    return report;
}

}  // namespace stowage
