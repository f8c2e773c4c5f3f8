#pragma once

// Finite simple graphs, lexicographic products, and perfect-coloring checks
// at finite scale.

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "percol/errors.hpp"
#include "percol/multipath.hpp"

namespace percol {

class FiniteGraph {
public:
    FiniteGraph() = default;

    FiniteGraph(int vertices, const std::vector<std::pair<int, int>>& edges)
        : vertices_(vertices), adjacency_(vertices) {
        if (vertices < 0) throw DomainError("vertex count must be nonnegative");
        std::set<std::pair<int, int>> seen;
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= vertices || v >= vertices)
                throw DomainError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
            if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
            auto key = std::minmax(u, v);
            if (!seen.insert(key).second)
                throw DomainError("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
        edges_.assign(seen.begin(), seen.end());
    }

    int vertex_count() const { return vertices_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    /// Edges as (u, v) with u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
    }

    bool is_regular() const {
        for (int v = 1; v < vertices_; ++v)
            if (degree(v) != degree(0)) return false;
        return true;
    }

    friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

    static FiniteGraph empty(int n) { return {n, {}}; }

    static FiniteGraph complete(int n) {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
        return {n, e};
    }

    static FiniteGraph path(int n) {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
        return {n, e};
    }

    static FiniteGraph cycle(int n) {
        if (n < 3) throw DomainError("a simple cycle needs at least 3 vertices");
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
        return {n, e};
    }

    /// G(n, prob) with a caller-owned generator.
    template <class Rng>
    static FiniteGraph random(int n, double prob, Rng& rng) {
        std::bernoulli_distribution coin(prob);
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) e.emplace_back(u, v);
        return {n, e};
    }

private:
    int vertices_ = 0;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
};

/// Total map vertex -> color in 0..k-1 with every color used.
class VertexColoring {
public:
    VertexColoring() = default;
    explicit VertexColoring(std::vector<int> colors) : colors_(std::move(colors)) {
        int k = 0;
        for (int c : colors_) {
            if (c < 0) throw InvalidColoring("negative color");
            k = std::max(k, c + 1);
        }
        std::vector<bool> used(k, false);
        for (int c : colors_) used[c] = true;
        for (int j = 0; j < k; ++j)
            if (!used[j]) throw InvalidColoring("color " + std::to_string(j) + " is never used");
        k_ = k;
    }

    /// Compacts arbitrary labels to 0..k-1 preserving their relative order.
    static VertexColoring normalized(const std::vector<int>& labels) {
        std::vector<int> distinct(labels);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> out;
        out.reserve(labels.size());
        for (int l : labels)
            out.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), l) - distinct.begin()));
        return VertexColoring(std::move(out));
    }

    int size() const { return static_cast<int>(colors_.size()); }
    int colors() const { return k_; }
    int operator[](int v) const { return colors_[v]; }
    const std::vector<int>& labels() const { return colors_; }

    friend bool operator==(const VertexColoring&, const VertexColoring&) = default;

private:
    std::vector<int> colors_;
    int k_ = 0;
};

/// (u1,v1) ~ (u2,v2) iff u1 ~ u2 in G, or u1 = u2 and v1 ~ v2 in H.
/// Vertex (u, v) gets index u * |V(H)| + v.
inline FiniteGraph lexicographic_product(const FiniteGraph& g, const FiniteGraph& h) {
    const int nh = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (auto [u1, u2] : g.edges())
        for (int v1 = 0; v1 < nh; ++v1)
            for (int v2 = 0; v2 < nh; ++v2) edges.emplace_back(u1 * nh + v1, u2 * nh + v2);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (auto [v1, v2] : h.edges()) edges.emplace_back(u * nh + v1, u * nh + v2);
    return {g.vertex_count() * nh, edges};
}

/// Neighbor color-count matrix of a finite coloring. The NotPerfect witness
/// uses vertex indices in place of block indices.
inline Result<ParameterMatrix, NotPerfect> verify_perfect_finite(const FiniteGraph& g, const VertexColoring& c) {
    if (c.size() != g.vertex_count())
        throw PreconditionViolated("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                                   std::to_string(g.vertex_count()));
    const int k = c.colors();
    std::vector<std::vector<int>> rows(k);
    std::vector<long long> seen_at(k, -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> sphere(k, 0);
        for (int w : g.neighbors(v)) ++sphere[c[w]];
        const int j = c[v];
        if (seen_at[j] < 0) {
            rows[j] = std::move(sphere);
            seen_at[j] = v;
        } else if (rows[j] != sphere) {
            return NotPerfect{j, seen_at[j], v, rows[j], std::move(sphere)};
        }
    }
    return ParameterMatrix(std::move(rows));
}

inline bool is_perfect(const FiniteGraph& g, const VertexColoring& c) {
    return verify_perfect_finite(g, c).has_value();
}

/// Coarsest perfect coloring refining `initial` (iterated color refinement).
/// The result is numbered by first occurrence in vertex order.
inline VertexColoring refine_to_perfect(const FiniteGraph& g, const std::vector<int>& initial) {
    if (static_cast<int>(initial.size()) != g.vertex_count())
        throw PreconditionViolated("initial coloring size mismatch");
    std::vector<int> cur = VertexColoring::normalized(initial).labels();
    int classes = 0;
    for (int c : cur) classes = std::max(classes, c + 1);
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<int> next(cur.size());
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> sig(classes, 0);
            for (int w : g.neighbors(v)) ++sig[cur[w]];
            auto key = std::make_pair(cur[v], std::move(sig));
            auto it = ids.try_emplace(std::move(key), static_cast<int>(ids.size())).first;
            next[v] = it->second;
        }
        const int next_classes = static_cast<int>(ids.size());
        cur = std::move(next);
        if (next_classes == classes) break;
        classes = next_classes;
    }
    return VertexColoring(std::move(cur));
}

/// psi . Phi on G . H: vertex (u, v) gets phi_{psi(u)}(v).
///
/// `phi[p]` colors H for psi-color p using labels from a shared color space;
/// label sets of different p must be disjoint. The output is compacted to
/// 0..k-1 in increasing label order.
inline VertexColoring disjunctive_finite(const FiniteGraph& g, const VertexColoring& psi,
                                         const std::vector<std::vector<int>>& phi, const FiniteGraph& h) {
    if (psi.size() != g.vertex_count()) throw PreconditionViolated("psi does not cover G");
    if (!is_perfect(g, psi)) throw PreconditionViolated("psi is not a perfect coloring of G");
    if (static_cast<int>(phi.size()) != psi.colors())
        throw PreconditionViolated("need exactly one coloring of H per color of psi");
    std::map<int, int> owner;
    for (std::size_t p = 0; p < phi.size(); ++p) {
        if (static_cast<int>(phi[p].size()) != h.vertex_count())
            throw PreconditionViolated("phi[" + std::to_string(p) + "] does not cover H");
        if (!is_perfect(h, VertexColoring::normalized(phi[p])))
            throw PreconditionViolated("phi[" + std::to_string(p) + "] is not a perfect coloring of H");
        for (int label : phi[p]) {
            if (label < 0) throw PreconditionViolated("negative color label");
            auto [it, fresh] = owner.emplace(label, static_cast<int>(p));
            if (!fresh && it->second != static_cast<int>(p))
                throw PreconditionViolated("color " + std::to_string(label) + " is shared by phi[" +
                                           std::to_string(it->second) + "] and phi[" + std::to_string(p) + "]");
        }
    }
    const int nh = h.vertex_count();
    std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()) * nh);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < nh; ++v) labels[u * nh + v] = phi[psi[u]][v];
    auto out = VertexColoring::normalized(labels);
    if (!is_perfect(lexicographic_product(g, h), out))
        throw InternalError("disjunctive coloring failed perfectness re-verification");
    return out;
}

/// The finite cycle product C_p . G (G = empty or complete block graph) with
/// the labeled export of a p-periodic multipath coloring, p >= 3.
inline std::pair<FiniteGraph, VertexColoring> cycle_product(const PeriodicColoring& c) {
    const int n = c.family().n;
    FiniteGraph block = c.family().kind == BlockKind::Empty ? FiniteGraph::empty(n) : FiniteGraph::complete(n);
    FiniteGraph g = lexicographic_product(FiniteGraph::cycle(c.length()), block);
    std::vector<int> labels;
    for (const auto& blk : vertex_labels(c)) labels.insert(labels.end(), blk.begin(), blk.end());
    return {std::move(g), VertexColoring(std::move(labels))};
}

// ---------------------------------------------------------------------------
// Edge-list text format: "V E" then E lines "u v".

inline FiniteGraph read_edge_list(std::istream& in) {
    long long v = 0, e = 0;
    if (!(in >> v >> e) || v < 0 || e < 0) throw ParseError("edge list: expected header 'V E'");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < e; ++i) {
        int a = 0, b = 0;
        if (!(in >> a >> b)) throw ParseError("edge list: expected " + std::to_string(e) + " edges, got " + std::to_string(i));
        edges.emplace_back(a, b);
    }
    try {
        return {static_cast<int>(v), edges};
    } catch (const DomainError& err) {
        throw ParseError(std::string("edge list: ") + err.what());
    }
}

inline void write_edge_list(std::ostream& out, const FiniteGraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace percol
