#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stowage/model.hpp"
#include "stowage/moves.hpp"
#include "stowage/rng.hpp"

namespace stowage {

// Recipe for a random instance. Generation is a pure function of the spec
// (the seed included).
struct InstanceSpec {
    std::string name = "generated";
    std::uint64_t seed = 0;
    std::int32_t rows = 10;
    std::int32_t cols = 8;
    std::int32_t deck_count = 4;
    double unusable_fraction = 0.08;  // in [0, 1)
    std::int32_t cargo_count = 288;
    std::vector<std::string> categories = {"A", "B", "C", "D", "E", "F", "G", "H"};
    Mass weight_min = 1;
    Mass weight_max = 10;
    double deck_limit_factor = 1.2;  // limit = factor * expected deck load
    Duration base_time_T = 10;
    Duration penalty_Q = 100;

    void validate() const {
        if (rows < 1 || cols < 1 || deck_count < 1)
            throw ValidationError("spec: rows, cols and deck_count must be >= 1");
        if (!(unusable_fraction >= 0.0 && unusable_fraction < 1.0))
            throw ValidationError("spec: unusable_fraction must be in [0, 1)");
        if (cargo_count < 0) throw ValidationError("spec: cargo_count must be >= 0");
        if (categories.empty()) throw ValidationError("spec: category alphabet is empty");
        if (weight_min < 0 || weight_max < weight_min)
            throw ValidationError("spec: weight range must satisfy 0 <= min <= max");
        if (deck_limit_factor <= 0.0) throw ValidationError("spec: deck_limit_factor must be > 0");
        if (base_time_T < 0 || penalty_Q < 0)
            throw ValidationError("spec: base_time_T and penalty_Q must be >= 0");
    }
};

namespace detail {

// Grows one contiguous blocked region per deck until the quota is reached,
// like the dark unusable patches of a real deck plan.
inline void mark_unusable_region(std::vector<bool>& usable, std::int32_t rows, std::int32_t cols,
                                 std::int32_t deck_offset, std::int32_t quota, Rng& rng) {
    if (quota <= 0) return;
    std::vector<std::int32_t> region;
    std::vector<bool> in_region(rows * cols, false);
    std::vector<std::int32_t> frontier;
    const std::int32_t start =
        static_cast<std::int32_t>(rng.index(static_cast<std::size_t>(rows) * cols));
    frontier.push_back(start);
    while (static_cast<std::int32_t>(region.size()) < quota && !frontier.empty()) {
        const std::size_t pick = rng.index(frontier.size());
        const std::int32_t local = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        if (in_region[local]) continue;
        in_region[local] = true;
        region.push_back(local);
        usable[deck_offset + local] = false;
        const std::int32_t r = local / cols, c = local % cols;
        if (r > 0 && !in_region[local - cols]) frontier.push_back(local - cols);
        if (r + 1 < rows && !in_region[local + cols]) frontier.push_back(local + cols);
        if (c > 0 && !in_region[local - 1]) frontier.push_back(local - 1);
        if (c + 1 < cols && !in_region[local + 1]) frontier.push_back(local + 1);
    }
}

}  // namespace detail

// Builds a random instance: contiguous unusable regions, cargo weights and
// categories from the spec policy, per-category usable-cell supply covering
// the cargo demand, and uniform deck limits at factor * expected deck load.
// Verifies that at least one feasible assignment exists before returning.
inline Instance generate_instance(const InstanceSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);

    const std::int32_t per_deck = spec.rows * spec.cols;
    const std::int64_t total_cells = static_cast<std::int64_t>(per_deck) * spec.deck_count;
    const std::int32_t unusable_total =
        static_cast<std::int32_t>(static_cast<double>(total_cells) * spec.unusable_fraction);

    std::vector<bool> usable(total_cells, true);
    const std::int32_t base_quota = unusable_total / spec.deck_count;
    std::int32_t remainder = unusable_total % spec.deck_count;
    for (std::int32_t p = 0; p < spec.deck_count; ++p) {
        const std::int32_t quota = base_quota + (remainder > 0 ? 1 : 0);
        if (remainder > 0) --remainder;
        detail::mark_unusable_region(usable, spec.rows, spec.cols, p * per_deck, quota, rng);
    }

    std::int32_t usable_count = 0;
    for (bool u : usable) usable_count += u ? 1 : 0;
    if (usable_count < spec.cargo_count)
        throw ValidationError("spec admits no feasible instance: " +
                              std::to_string(spec.cargo_count) + " cargos vs " +
                              std::to_string(usable_count) + " usable cells");

    const std::int32_t cat_count = static_cast<std::int32_t>(spec.categories.size());
    std::vector<Cargo> cargos(spec.cargo_count);
    for (std::int32_t i = 0; i < spec.cargo_count; ++i) {
        cargos[i].id = i;
        cargos[i].weight = rng.uniform_int(spec.weight_min, spec.weight_max);
        cargos[i].category = spec.categories[rng.index(cat_count)];
    }

    // Usable-cell categories: one cell per cargo category plus random padding,
    // shuffled over the usable cells so a full category matching exists.
    std::vector<std::string> cell_labels;
    cell_labels.reserve(usable_count);
    for (const Cargo& c : cargos) cell_labels.push_back(c.category);
    for (std::int32_t i = spec.cargo_count; i < usable_count; ++i)
        cell_labels.push_back(spec.categories[rng.index(cat_count)]);
    rng.shuffle(cell_labels);

    std::vector<Cell> cells(total_cells);
    std::size_t next_label = 0;
    for (std::int32_t id = 0; id < total_cells; ++id) {
        Cell& c = cells[id];
        c.id = id;
        c.deck = id / per_deck + 1;
        c.row = (id % per_deck) / spec.cols;
        c.col = id % spec.cols;
        c.usable = usable[id];
        c.category = c.usable ? cell_labels[next_label++]
                              : spec.categories[rng.index(cat_count)];
    }

    const double expected_deck_load = static_cast<double>(spec.cargo_count) *
                                      static_cast<double>(spec.weight_min + spec.weight_max) /
                                      2.0 / static_cast<double>(spec.deck_count);
    const Mass limit =
        static_cast<Mass>(spec.deck_limit_factor * expected_deck_load + 0.9999999);
    std::vector<Deck> decks(spec.deck_count);
    for (std::int32_t p = 0; p < spec.deck_count; ++p) decks[p] = {p + 1, limit};

    Instance instance(spec.name, spec.rows, spec.cols, std::move(decks), std::move(cells),
                      std::move(cargos), spec.base_time_T, spec.penalty_Q);

    // An instance that cannot be packed greedily is rejected outright.
    try {
        Rng check_rng(mix_seed(spec.seed, 0x666561736962ULL));
        random_feasible_solution(instance, check_rng);
    } catch (const InfeasibleError&) {
        throw ValidationError("spec admits no feasible instance: deck limits too tight for '" +
                              spec.name + "'");
    }
    return instance;
}

// Six fixed seeded instances at the benchmark scale, named Inst0..Inst5.
// Only the seed varies across the suite.
inline std::vector<std::uint64_t> builtin_suite_seeds() {
    return {101, 102, 103, 104, 105, 106};
}

inline std::vector<Instance> builtin_benchmark_suite() {
    std::vector<Instance> suite;
    const std::vector<std::uint64_t> seeds = builtin_suite_seeds();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        InstanceSpec spec;
        spec.name = "Inst" + std::to_string(i);
        spec.seed = seeds[i];
        suite.push_back(generate_instance(spec));
    }
    return suite;
}

}  // namespace stowage
