#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stowage/model.hpp"

namespace testutil {

// Compact builder for hand-written grid instances. Cell categories are given
// per cell in id order; an empty usable mask means every cell is usable.
inline stowage::Instance make_grid(std::int32_t rows, std::int32_t cols, std::int32_t deck_count,
                                   std::vector<std::string> cell_categories,
                                   std::vector<bool> usable,
                                   std::vector<std::pair<stowage::Mass, std::string>> cargo_spec,
                                   std::vector<stowage::Mass> deck_limits,
                                   stowage::Duration T = 10, stowage::Duration Q = 100,
                                   std::string name = "test") {
    const std::int32_t per_deck = rows * cols;
    const std::int32_t total = per_deck * deck_count;
    std::vector<stowage::Cell> cells(total);
    for (std::int32_t id = 0; id < total; ++id) {
        cells[id].id = id;
        cells[id].deck = id / per_deck + 1;
        cells[id].row = (id % per_deck) / cols;
        cells[id].col = id % cols;
        cells[id].usable = usable.empty() ? true : usable[id];
        cells[id].category = cell_categories[id];
    }
    std::vector<stowage::Deck> decks(deck_count);
    for (std::int32_t p = 0; p < deck_count; ++p)
        decks[p] = {p + 1, deck_limits.empty() ? stowage::Mass{1'000'000} : deck_limits[p]};
    std::vector<stowage::Cargo> cargos(cargo_spec.size());
    for (std::size_t i = 0; i < cargo_spec.size(); ++i)
        cargos[i] = {static_cast<std::int64_t>(i), cargo_spec[i].first, cargo_spec[i].second};
    return stowage::Instance(std::move(name), rows, cols, std::move(decks), std::move(cells),
                             std::move(cargos), T, Q);
}

// Number of cargos whose assigned cell differs between the two solutions.
inline std::size_t assignment_difference(const stowage::Solution& a, const stowage::Solution& b) {
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.cell_of_cargo[i] != b.cell_of_cargo[i]) ++diff;
    return diff;
}

}  // namespace testutil
