#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "stowage/model.hpp"

namespace stowage {

inline constexpr int kInstanceFormatVersion = 1;
inline constexpr int kSolutionFormatVersion = 1;

namespace detail {

using Json = nlohmann::ordered_json;

inline const Json& require_field(const Json& node, const char* key, const std::string& where) {
    auto it = node.find(key);
    if (it == node.end())
        throw ValidationError(where + ": missing field '" + key + "'");
    return *it;
}

template <typename T>
inline T as(const Json& node, const char* key, const std::string& where) {
    const Json& field = require_field(node, key, where);
    try {
        return field.get<T>();
    } catch (const Json::exception&) {
        throw ValidationError(where + ": field '" + key + "' has the wrong type");
    }
}

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("not valid json: ") + e.what());
    }
}

}  // namespace detail

// Reads the documented instance schema. Schema violations, duplicate ids and
// broken instance invariants throw ValidationError naming the location.
inline Instance parse_instance(const std::string& text) {
    using detail::as;
    const detail::Json doc = detail::parse_json(text);
    if (!doc.is_object()) throw ValidationError("top level: expected an object");

    const int version = as<int>(doc, "format_version", "top level");
    if (version != kInstanceFormatVersion)
        throw ValidationError("unsupported format_version " + std::to_string(version));

    const std::string name = as<std::string>(doc, "name", "top level");
    const detail::Json& meta = detail::require_field(doc, "meta", "top level");
    const std::int32_t rows = as<std::int32_t>(meta, "rows", "meta");
    const std::int32_t cols = as<std::int32_t>(meta, "cols", "meta");
    const Duration T = as<Duration>(meta, "base_time_T", "meta");
    const Duration Q = as<Duration>(meta, "penalty_Q", "meta");

    std::vector<Deck> decks;
    const detail::Json& jdecks = detail::require_field(doc, "decks", "top level");
    if (!jdecks.is_array()) throw ValidationError("decks: expected an array");
    for (std::size_t i = 0; i < jdecks.size(); ++i) {
        const std::string where = "decks[" + std::to_string(i) + "]";
        decks.push_back({as<std::int32_t>(jdecks[i], "index", where),
                         as<Mass>(jdecks[i], "weight_limit", where)});
    }

    std::vector<Cell> cells;
    const detail::Json& jcells = detail::require_field(doc, "cells", "top level");
    if (!jcells.is_array()) throw ValidationError("cells: expected an array");
    for (std::size_t i = 0; i < jcells.size(); ++i) {
        const std::string where = "cells[" + std::to_string(i) + "]";
        Cell c;
        c.id = as<std::int32_t>(jcells[i], "id", where);
        c.deck = as<std::int32_t>(jcells[i], "deck", where);
        c.row = as<std::int32_t>(jcells[i], "row", where);
        c.col = as<std::int32_t>(jcells[i], "col", where);
        c.usable = as<bool>(jcells[i], "usable", where);
        c.category = as<std::string>(jcells[i], "category", where);
        cells.push_back(std::move(c));
    }

    std::vector<Cargo> cargos;
    const detail::Json& jcargos = detail::require_field(doc, "cargos", "top level");
    if (!jcargos.is_array()) throw ValidationError("cargos: expected an array");
    for (std::size_t i = 0; i < jcargos.size(); ++i) {
        const std::string where = "cargos[" + std::to_string(i) + "]";
        cargos.push_back({as<std::int64_t>(jcargos[i], "id", where),
                          as<Mass>(jcargos[i], "weight", where),
                          as<std::string>(jcargos[i], "category", where)});
    }

    return Instance(name, rows, cols, std::move(decks), std::move(cells), std::move(cargos), T, Q);
}

// Canonical serialization: fixed key order, entities sorted by id, 2-space
// indent. Byte-stable for equal instances.
inline std::string serialize_instance(const Instance& instance) {
    detail::Json doc;
    doc["format_version"] = kInstanceFormatVersion;
    doc["name"] = instance.name();
    doc["meta"] = {{"rows", instance.rows()},
                   {"cols", instance.cols()},
                   {"base_time_T", instance.base_time_T()},
                   {"penalty_Q", instance.penalty_Q()}};
    doc["decks"] = detail::Json::array();
    for (const Deck& d : instance.decks())
        doc["decks"].push_back({{"index", d.index}, {"weight_limit", d.weight_limit}});
    doc["cells"] = detail::Json::array();
    for (const Cell& c : instance.cells())
        doc["cells"].push_back({{"id", c.id},
                                {"deck", c.deck},
                                {"row", c.row},
                                {"col", c.col},
                                {"usable", c.usable},
                                {"category", c.category}});
    doc["cargos"] = detail::Json::array();
    for (const Cargo& c : instance.cargos())
        doc["cargos"].push_back({{"id", c.id}, {"weight", c.weight}, {"category", c.category}});
    return doc.dump(2) + "\n";
}

inline Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

// Solutions are stored as a sparse cargo-id -> cell-id list.
inline std::string serialize_solution(const Solution& solution, const Instance& instance) {
    detail::Json doc;
    doc["format_version"] = kSolutionFormatVersion;
    doc["assignments"] = detail::Json::array();
    for (std::size_t i = 0; i < solution.size(); ++i) {
        if (solution.cell_of_cargo[i] == Solution::kUnassigned) continue;
        doc["assignments"].push_back(
            {{"cargo", instance.cargo_id_at(static_cast<std::int32_t>(i))},
             {"cell", solution.cell_of_cargo[i]}});
    }
    return doc.dump(2) + "\n";
}

inline Solution parse_solution(const std::string& text, const Instance& instance) {
    using detail::as;
    const detail::Json doc = detail::parse_json(text);
    if (!doc.is_object()) throw ValidationError("top level: expected an object");
    const int version = as<int>(doc, "format_version", "top level");
    if (version != kSolutionFormatVersion)
        throw ValidationError("unsupported format_version " + std::to_string(version));
    const detail::Json& arr = detail::require_field(doc, "assignments", "top level");
    if (!arr.is_array()) throw ValidationError("assignments: expected an array");

    Solution s(instance.cargo_count());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "assignments[" + std::to_string(i) + "]";
        const std::int64_t cargo_id = as<std::int64_t>(arr[i], "cargo", where);
        const std::int64_t cell_id = as<std::int64_t>(arr[i], "cell", where);
        const std::int32_t idx = instance.cargo_index(cargo_id);  // throws on unknown id
        if (!instance.valid_cell_id(cell_id))
            throw ValidationError(where + ": unknown cell id " + std::to_string(cell_id));
        if (s.cell_of_cargo[idx] != Solution::kUnassigned)
            throw ValidationError(where + ": cargo " + std::to_string(cargo_id) +
                                  " assigned twice");
        s.cell_of_cargo[idx] = static_cast<std::int32_t>(cell_id);
    }
    return s;
}

inline Solution load_solution_file(const std::string& path, const Instance& instance) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open solution file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_solution(buf.str(), instance);
}

}  // namespace stowage
