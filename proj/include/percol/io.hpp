#pragma once

// JSON encodings shared by the library and the command-line tool.
//
//   coloring      {"family":{"kind":"empty"|"complete","n":N},"colors":K,"period":[[...],...]}
//   matrix        {"matrix":[[...],...]}
//   semicoloring  {"parity":"even"|"odd","n":N,"period":[[...],...]}
//   catalog       JSON lines: one header line {"catalog":{...}} followed by
//                 one line per entry {coloring fields, "matrix", "class"}
//
// period[i][j] is the number of j-colored vertices of block i.

#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "percol/constructions.hpp"
#include "percol/enumeration.hpp"
#include "percol/errors.hpp"
#include "percol/finite_graph.hpp"
#include "percol/multipath.hpp"

namespace percol::io {

using nlohmann::json;

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

inline std::vector<BlockProfile> period_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw ParseError("period must be a nonempty array of count arrays");
    std::vector<BlockProfile> period;
    for (const auto& r : rows) period.emplace_back(r.get<std::vector<int>>());
    return period;
}

inline json period_to_json(const std::vector<BlockProfile>& period) {
    json rows = json::array();
    for (const auto& b : period) rows.push_back(b.counts());
    return rows;
}

}  // namespace detail

inline json to_json(const Family& f) { return {{"kind", to_string(f.kind)}, {"n", f.n}}; }

inline Family family_from_json(const json& j) {
    return detail::guarded("family", [&] {
        return Family(block_kind_from_string(j.at("kind").get<std::string>()), j.at("n").get<int>());
    });
}

inline json to_json(const PeriodicColoring& c) {
    return {{"family", to_json(c.family())}, {"colors", c.colors()}, {"period", detail::period_to_json(c.period())}};
}

/// Colors that never occur are dropped and the rest renumbered in order.
inline PeriodicColoring coloring_from_json(const json& j) {
    return detail::guarded("coloring", [&] {
        const Family family = family_from_json(j.at("family"));
        const int k = j.at("colors").get<int>();
        auto period = detail::period_from_json(j.at("period"));
        for (const auto& b : period)
            if (b.colors() != k)
                throw ParseError("coloring: every period row must have 'colors' = " + std::to_string(k) + " entries");
        return PeriodicColoring::normalized(family, period);
    });
}

inline json to_json(const ParameterMatrix& m) { return {{"matrix", m.rows()}}; }

inline ParameterMatrix matrix_from_json(const json& j) {
    return detail::guarded("matrix", [&] { return ParameterMatrix(j.at("matrix").get<std::vector<std::vector<int>>>()); });
}

inline json to_json(const Semicoloring& s) {
    return {{"parity", to_string(s.parity)}, {"n", s.n}, {"period", detail::period_to_json(s.period)}};
}

inline Semicoloring semicoloring_from_json(const json& j) {
    return detail::guarded("semicoloring", [&] {
        const auto parity = j.at("parity").get<std::string>();
        if (parity != "even" && parity != "odd") throw ParseError("semicoloring: parity must be even|odd");
        return Semicoloring(parity == "even" ? Parity::Even : Parity::Odd, j.at("n").get<int>(),
                            detail::period_from_json(j.at("period")));
    });
}

inline json to_json(const NotPerfect& w) {
    return {{"color", w.color},
            {"first_block", w.first_block},
            {"block", w.block},
            {"expected", w.expected},
            {"found", w.found}};
}

inline VertexColoring vertex_coloring_from_json(const json& j) {
    return detail::guarded("vertex coloring", [&] { return VertexColoring::normalized(j.get<std::vector<int>>()); });
}

inline json parse(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse(in);
}

// ---------------------------------------------------------------------------
// Catalog files

inline json catalog_header(const Catalog& c) {
    return {{"catalog",
             {{"family", to_json(c.family())},
              {"max_colors", c.bounds().max_colors},
              {"max_period", c.bounds().max_period},
              {"entries", c.size()}}}};
}

inline void write_jsonl(std::ostream& out, const Catalog& c) {
    out << catalog_header(c).dump() << '\n';
    for (const auto& e : c.entries()) {
        json line = to_json(e.coloring);
        line["matrix"] = e.matrix.rows();
        line["class"] = e.label ? to_string(*e.label) : "unclassifiable";
        out << line.dump() << '\n';
    }
}

/// Reads a catalog written by write_jsonl. Entries are re-verified and
/// re-canonicalized; a stored matrix or class that disagrees is an error.
inline Catalog read_jsonl(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("catalog: empty file");
    json header;
    try {
        header = json::parse(line).at("catalog");
    } catch (const json::exception& e) {
        throw ParseError(std::string("catalog: bad header: ") + e.what());
    }
    Catalog cat = detail::guarded("catalog header", [&] {
        return Catalog(family_from_json(header.at("family")),
                       Bounds{header.at("max_colors").get<int>(), header.at("max_period").get<int>()});
    });
    long long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError("catalog line " + std::to_string(lineno) + ": " + e.what());
        }
        auto c = coloring_from_json(j);
        if (c.family() != cat.family()) throw ParseError("catalog line " + std::to_string(lineno) + ": family mismatch");
        auto m = infer_matrix(c);
        if (!m) throw ParseError("catalog line " + std::to_string(lineno) + ": coloring is not perfect");
        if (j.contains("matrix") && matrix_from_json(j) != *m)
            throw ParseError("catalog line " + std::to_string(lineno) + ": stored matrix disagrees with the coloring");
        cat.add(c);
    }
    return cat;
}

/// One row per (colors, primitive period) cell with per-class counts.
inline void write_csv_summary(std::ostream& out, const Catalog& c) {
    out << "kind,n,colors,period";
    for (auto l : kAllLabels) out << ',' << to_string(l);
    out << ",unclassifiable,total\n";
    std::map<std::pair<int, int>, std::map<std::string, std::size_t>> cells;
    for (const auto& e : c.entries()) {
        auto& cell = cells[{e.coloring.colors(), e.coloring.length()}];
        ++cell[e.label ? to_string(*e.label) : "unclassifiable"];
        ++cell["total"];
    }
    for (const auto& [key, counts] : cells) {
        out << to_string(c.family().kind) << ',' << c.family().n << ',' << key.first << ',' << key.second;
        for (auto l : kAllLabels) {
            auto it = counts.find(to_string(l));
            out << ',' << (it == counts.end() ? 0 : it->second);
        }
        auto un = counts.find("unclassifiable");
        out << ',' << (un == counts.end() ? 0 : un->second) << ',' << counts.at("total") << '\n';
    }
}

/// Reads the per-cell rows of write_csv_summary back as
/// {(colors, period) -> {column -> count}}.
inline std::map<std::pair<int, int>, std::map<std::string, std::size_t>> read_csv_summary(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("csv: empty file");
    std::vector<std::string> cols;
    {
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) cols.push_back(col);
    }
    if (cols.size() < 5 || cols[2] != "colors" || cols[3] != "period") throw ParseError("csv: unexpected header");
    std::map<std::pair<int, int>, std::map<std::string, std::size_t>> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::vector<std::string> f;
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        if (f.size() != cols.size()) throw ParseError("csv: ragged row");
        try {
            auto& row = out[{std::stoi(f[2]), std::stoi(f[3])}];
            for (std::size_t i = 4; i < f.size(); ++i) row[cols[i]] = std::stoull(f[i]);
        } catch (const std::logic_error&) {
            throw ParseError("csv: non-numeric cell");
        }
    }
    return out;
}

}  // namespace percol::io
