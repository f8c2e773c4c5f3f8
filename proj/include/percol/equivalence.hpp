#pragma once

// Equivalent colors and the gluing operation.
//
// Two colors are equivalent when identifying them leaves the coloring
// perfect. That identify-then-verify test is the definition used here; the
// parameter-matrix row test is offered separately as a fast filter.

#include <utility>
#include <vector>

#include "percol/errors.hpp"
#include "percol/finite_graph.hpp"
#include "percol/multipath.hpp"

namespace percol {

using ColorPartition = std::vector<std::vector<int>>;

namespace detail {

inline void check_pair(int k, int a, int b) {
    if (a < 0 || b < 0 || a >= k || b >= k) throw PreconditionViolated("color index out of range");
    if (a == b) throw PreconditionViolated("equivalence test needs two distinct colors");
}

// Relabels color j as target[j] and compacts the labels.
inline PeriodicColoring merge_colors(const PeriodicColoring& c, const std::vector<int>& target) {
    int width = 0;
    for (int t : target) width = std::max(width, t + 1);
    std::vector<BlockProfile> period;
    for (const auto& b : c.period()) {
        std::vector<int> counts(width, 0);
        for (int j = 0; j < c.colors(); ++j) counts[target[j]] += b[j];
        period.emplace_back(std::move(counts));
    }
    return PeriodicColoring::normalized(c.family(), period);
}

inline VertexColoring merge_colors(const VertexColoring& c, const std::vector<int>& target) {
    std::vector<int> labels;
    labels.reserve(c.size());
    for (int v = 0; v < c.size(); ++v) labels.push_back(target[c[v]]);
    return VertexColoring::normalized(labels);
}

inline std::vector<int> identify_pair(int k, int a, int b) {
    std::vector<int> target(k);
    for (int j = 0; j < k; ++j) target[j] = j;
    target[b] = a;
    return target;
}

template <class Perfect>
ColorPartition partition_from(int k, Perfect&& equivalent) {
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
    for (int a = 0; a < k; ++a) {
        rel[a][a] = true;
        for (int b = a + 1; b < k; ++b) rel[a][b] = rel[b][a] = equivalent(a, b);
    }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (rel[a][b] && rel[b][c] && !rel[a][c])
                    throw TransitivityViolation("colors " + std::to_string(a) + "~" + std::to_string(b) + "~" +
                                                std::to_string(c) + " but not " + std::to_string(a) + "~" +
                                                std::to_string(c));
    ColorPartition classes;
    std::vector<bool> placed(k, false);
    for (int a = 0; a < k; ++a) {
        if (placed[a]) continue;
        std::vector<int> cls;
        for (int b = a; b < k; ++b)
            if (rel[a][b]) {
                cls.push_back(b);
                placed[b] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

inline std::vector<int> class_targets(int k, const ColorPartition& classes) {
    std::vector<int> target(k, -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (int j : classes[i]) target[j] = static_cast<int>(i);
    return target;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Matrix-row test

/// Rows a and b agree on every column outside {a, b}.
inline bool equivalent_colors_matrix(const ParameterMatrix& m, int a, int b) {
    detail::check_pair(m.size(), a, b);
    for (int l = 0; l < m.size(); ++l)
        if (l != a && l != b && m(a, l) != m(b, l)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Periodic multipath colorings

inline bool equivalent_colors_semantic(const PeriodicColoring& c, int a, int b) {
    detail::check_pair(c.colors(), a, b);
    if (!is_perfect(c)) throw PreconditionViolated("input coloring is not perfect");
    return is_perfect(detail::merge_colors(c, detail::identify_pair(c.colors(), a, b)));
}

inline ColorPartition equivalence_partition(const PeriodicColoring& c) {
    if (!is_perfect(c)) throw PreconditionViolated("input coloring is not perfect");
    return detail::partition_from(c.colors(), [&](int a, int b) {
        return is_perfect(detail::merge_colors(c, detail::identify_pair(c.colors(), a, b)));
    });
}

/// Identifies every equivalence class into one color; class i (ordered by its
/// smallest member) becomes color i. The result is block-monochrome.
inline PeriodicColoring glue(const PeriodicColoring& c) {
    auto classes = equivalence_partition(c);
    auto out = detail::merge_colors(c, detail::class_targets(c.colors(), classes));
    if (!is_perfect(out)) throw InternalError("glued coloring is not perfect: " + out.str());
    if (!is_block_monochrome(out)) throw InternalError("glued coloring is not block-monochrome: " + out.str());
    return out;
}

inline bool is_reduced(const PeriodicColoring& c) {
    return static_cast<int>(equivalence_partition(c).size()) == c.colors();
}

// ---------------------------------------------------------------------------
// Finite graphs

inline bool equivalent_colors_semantic(const FiniteGraph& g, const VertexColoring& c, int a, int b) {
    detail::check_pair(c.colors(), a, b);
    if (!is_perfect(g, c)) throw PreconditionViolated("input coloring is not perfect");
    return is_perfect(g, detail::merge_colors(c, detail::identify_pair(c.colors(), a, b)));
}

inline ColorPartition equivalence_partition(const FiniteGraph& g, const VertexColoring& c) {
    if (!is_perfect(g, c)) throw PreconditionViolated("input coloring is not perfect");
    return detail::partition_from(c.colors(), [&](int a, int b) {
        return is_perfect(g, detail::merge_colors(c, detail::identify_pair(c.colors(), a, b)));
    });
}

inline VertexColoring glue(const FiniteGraph& g, const VertexColoring& c) {
    auto classes = equivalence_partition(g, c);
    auto out = detail::merge_colors(c, detail::class_targets(c.colors(), classes));
    if (!is_perfect(g, out)) throw InternalError("glued finite coloring is not perfect");
    return out;
}

inline bool is_reduced(const FiniteGraph& g, const VertexColoring& c) {
    return static_cast<int>(equivalence_partition(g, c).size()) == c.colors();
}

/// Color pairs on which the matrix-row test and the identify-then-verify
/// test disagree.
inline std::vector<std::pair<int, int>> equivalence_divergences(const PeriodicColoring& c) {
    auto m = infer_matrix(c);
    if (!m) throw PreconditionViolated("input coloring is not perfect");
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < c.colors(); ++a)
        for (int b = a + 1; b < c.colors(); ++b)
            if (equivalent_colors_matrix(*m, a, b) != equivalent_colors_semantic(c, a, b)) out.emplace_back(a, b);
    return out;
}

}  // namespace percol
