#pragma once

// Periodic colorings of the multipath graphs C_inf . K_n (complete blocks) and
// C_inf . complement(K_n) (empty blocks).
//
// A coloring is stored as a period of block profiles: profile i holds, for
// each color j, the number of vertices of color j in block i. Vertex identity
// inside a block is irrelevant because block-mates have identical (empty) or
// swap-identical (complete) neighborhoods. Block indices are taken modulo the
// period length, so a period [A],[B] stands for ... A B A B ...

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "percol/errors.hpp"

namespace percol {

enum class BlockKind { Empty, Complete };

inline std::string to_string(BlockKind kind) {
    return kind == BlockKind::Empty ? "empty" : "complete";
}

inline BlockKind block_kind_from_string(const std::string& s) {
    if (s == "empty") return BlockKind::Empty;
    if (s == "complete") return BlockKind::Complete;
    throw ParseError("unknown block kind '" + s + "' (expected empty|complete)");
}

/// Block graph of the multipath: n isolated vertices or K_n.
struct Family {
    BlockKind kind = BlockKind::Empty;
    int n = 1;

    Family() = default;
    Family(BlockKind k, int block_size) : kind(k), n(block_size) {
        if (n < 1) throw DomainError("block size n must be >= 1, got " + std::to_string(n));
    }

    static Family empty(int n) { return {BlockKind::Empty, n}; }
    static Family complete(int n) { return {BlockKind::Complete, n}; }
    static Family path() { return {BlockKind::Empty, 1}; }

    /// Every vertex sees the 2n vertices of both adjacent blocks, plus its
    /// n-1 block-mates when blocks are complete.
    int degree() const { return kind == BlockKind::Empty ? 2 * n : 3 * n - 1; }

    std::string str() const { return to_string(kind) + "(n=" + std::to_string(n) + ")"; }

    friend bool operator==(const Family&, const Family&) = default;
    friend auto operator<=>(const Family&, const Family&) = default;
};

/// Color-count vector of one block.
class BlockProfile {
public:
    BlockProfile() = default;
    explicit BlockProfile(std::vector<int> counts) : counts_(std::move(counts)) {
        for (int c : counts_)
            if (c < 0) throw InvalidColoring("block profile has a negative count");
    }

    static BlockProfile monochrome(int colors, int color, int n) {
        std::vector<int> counts(colors, 0);
        counts.at(color) = n;
        return BlockProfile(std::move(counts));
    }

    int colors() const { return static_cast<int>(counts_.size()); }
    int total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }
    int operator[](int color) const { return counts_[color]; }
    bool contains(int color) const { return color < colors() && counts_[color] > 0; }
    const std::vector<int>& counts() const { return counts_; }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int j = 0; j < colors(); ++j)
            if (counts_[j] > 0) s.push_back(j);
        return s;
    }

    /// Zero-padded (or truncated, when the dropped entries are zero) copy.
    BlockProfile resized(int colors) const {
        std::vector<int> c(colors, 0);
        for (int j = 0; j < this->colors(); ++j) {
            if (j < colors) c[j] = counts_[j];
            else if (counts_[j] != 0) throw InvalidColoring("cannot drop a used color from a profile");
        }
        return BlockProfile(std::move(c));
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (int j = 0; j < colors(); ++j) os << (j ? "," : "") << counts_[j];
        os << ')';
        return os.str();
    }

    friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
    friend auto operator<=>(const BlockProfile&, const BlockProfile&) = default;

private:
    std::vector<int> counts_;
};

class PeriodicColoring {
public:
    /// All profiles must have the same length k, sum to family.n, and every
    /// color 0..k-1 must occur somewhere in the period.
    PeriodicColoring(Family family, std::vector<BlockProfile> period)
        : family_(family), period_(std::move(period)) {
        if (period_.empty()) throw InvalidColoring("period must contain at least one block");
        colors_ = period_.front().colors();
        if (colors_ < 1) throw InvalidColoring("coloring must use at least one color");
        std::vector<bool> used(colors_, false);
        for (std::size_t i = 0; i < period_.size(); ++i) {
            const auto& b = period_[i];
            if (b.colors() != colors_)
                throw InvalidColoring("block " + std::to_string(i) + " has " + std::to_string(b.colors()) +
                                      " color entries, expected " + std::to_string(colors_));
            if (b.total() != family_.n)
                throw InvalidColoring("block " + std::to_string(i) + " sums to " + std::to_string(b.total()) +
                                      ", expected n=" + std::to_string(family_.n));
            for (int j = 0; j < colors_; ++j)
                if (b[j] > 0) used[j] = true;
        }
        for (int j = 0; j < colors_; ++j)
            if (!used[j]) throw InvalidColoring("color " + std::to_string(j) + " is never used");
    }

    /// Pads ragged profiles with zeros and drops colors that never occur,
    /// renumbering the remaining colors contiguously in increasing order.
    static PeriodicColoring normalized(Family family, const std::vector<BlockProfile>& period) {
        std::size_t width = 0;
        for (const auto& b : period) width = std::max<std::size_t>(width, b.counts().size());
        std::vector<int> keep;
        for (std::size_t j = 0; j < width; ++j) {
            bool used = false;
            for (const auto& b : period)
                if (j < b.counts().size() && b.counts()[j] > 0) used = true;
            if (used) keep.push_back(static_cast<int>(j));
        }
        std::vector<BlockProfile> out;
        out.reserve(period.size());
        for (const auto& b : period) {
            std::vector<int> counts;
            counts.reserve(keep.size());
            for (int j : keep) counts.push_back(j < b.colors() ? b[j] : 0);
            out.emplace_back(std::move(counts));
        }
        return PeriodicColoring(family, std::move(out));
    }

    /// Block-monochrome coloring: block i is entirely colored colors[i].
    static PeriodicColoring block_monochrome(Family family, const std::vector<int>& colors) {
        int k = 0;
        for (int c : colors) {
            if (c < 0) throw InvalidColoring("negative color index");
            k = std::max(k, c + 1);
        }
        std::vector<BlockProfile> period;
        for (int c : colors) period.push_back(BlockProfile::monochrome(k, c, family.n));
        return normalized(family, period);
    }

    const Family& family() const { return family_; }
    int colors() const { return colors_; }
    int length() const { return static_cast<int>(period_.size()); }
    const std::vector<BlockProfile>& period() const { return period_; }

    /// Profile of block i for any integer i.
    const BlockProfile& block(long long i) const {
        long long p = length();
        long long r = ((i % p) + p) % p;
        return period_[static_cast<std::size_t>(r)];
    }

    std::string str() const {
        std::ostringstream os;
        os << family_.str() << " k=" << colors_ << " [";
        for (int i = 0; i < length(); ++i) os << (i ? " " : "") << period_[i].str();
        os << ']';
        return os.str();
    }

    friend bool operator==(const PeriodicColoring&, const PeriodicColoring&) = default;
    friend auto operator<=>(const PeriodicColoring& a, const PeriodicColoring& b) {
        if (auto c = a.family_ <=> b.family_; c != 0) return c;
        if (auto c = a.colors_ <=> b.colors_; c != 0) return c;
        return a.period_ <=> b.period_;
    }

private:
    Family family_;
    int colors_ = 0;
    std::vector<BlockProfile> period_;
};

/// k x k matrix of neighbor counts: row i, column j is the number of
/// j-colored neighbors of any i-colored vertex.
class ParameterMatrix {
public:
    ParameterMatrix() = default;
    explicit ParameterMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        for (const auto& r : rows_) {
            if (r.size() != rows_.size()) throw DomainError("parameter matrix must be square");
            for (int v : r)
                if (v < 0) throw DomainError("parameter matrix entries must be nonnegative");
        }
    }

    int size() const { return static_cast<int>(rows_.size()); }
    int operator()(int i, int j) const { return rows_[i][j]; }
    const std::vector<int>& row(int i) const { return rows_[i]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    int row_sum(int i) const { return std::accumulate(rows_[i].begin(), rows_[i].end(), 0); }

    /// m_ij = 0 iff m_ji = 0.
    bool zero_symmetric() const {
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if ((rows_[i][j] == 0) != (rows_[j][i] == 0)) return false;
        return true;
    }

    /// Matrix after relabeling color c as perm[c] (perm is a bijection).
    ParameterMatrix renamed(const std::vector<int>& perm) const {
        std::vector<std::vector<int>> out(size(), std::vector<int>(size(), 0));
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) out[perm[i]][perm[j]] = rows_[i][j];
        return ParameterMatrix(std::move(out));
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (int i = 0; i < size(); ++i) {
            os << (i ? "," : "") << '[';
            for (int j = 0; j < size(); ++j) os << (j ? "," : "") << rows_[i][j];
            os << ']';
        }
        os << ']';
        return os.str();
    }

    friend bool operator==(const ParameterMatrix&, const ParameterMatrix&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Witness of non-perfectness: a vertex of `color` in `block` sees `found`,
/// while a vertex of the same color in `first_block` sees `expected`.
struct NotPerfect {
    int color = 0;
    long long first_block = 0;
    long long block = 0;
    std::vector<int> expected;
    std::vector<int> found;

    std::string str() const {
        auto vec = [](const std::vector<int>& v) {
            std::string s = "(";
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s + ")";
        };
        return "color " + std::to_string(color) + " sees " + vec(expected) + " in block " +
               std::to_string(first_block) + " but " + vec(found) + " in block " + std::to_string(block);
    }

    friend bool operator==(const NotPerfect&, const NotPerfect&) = default;
};

class ColorAbsent : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

/// Color counts on the unit sphere around a `color` vertex of block i.
inline std::vector<int> neighbor_profile(const PeriodicColoring& c, long long i, int color) {
    const BlockProfile& here = c.block(i);
    if (color < 0 || color >= c.colors() || here[color] == 0)
        throw ColorAbsent("color " + std::to_string(color) + " does not occur in block " + std::to_string(i));
    const BlockProfile& left = c.block(i - 1);
    const BlockProfile& right = c.block(i + 1);
    std::vector<int> out(c.colors());
    for (int j = 0; j < c.colors(); ++j) out[j] = left[j] + right[j];
    if (c.family().kind == BlockKind::Complete) {
        for (int j = 0; j < c.colors(); ++j) out[j] += here[j];
        out[color] -= 1;
    }
    return out;
}

inline Result<ParameterMatrix, NotPerfect> infer_matrix(const PeriodicColoring& c) {
    const int k = c.colors();
    std::vector<std::vector<int>> rows(k);
    std::vector<long long> seen_at(k, -1);
    for (int i = 0; i < c.length(); ++i) {
        for (int j = 0; j < k; ++j) {
            if (c.block(i)[j] == 0) continue;
            auto sphere = neighbor_profile(c, i, j);
            if (seen_at[j] < 0) {
                rows[j] = std::move(sphere);
                seen_at[j] = i;
            } else if (rows[j] != sphere) {
                return NotPerfect{j, seen_at[j], i, rows[j], std::move(sphere)};
            }
        }
    }
    return ParameterMatrix(std::move(rows));
}

inline bool is_perfect(const PeriodicColoring& c) { return infer_matrix(c).has_value(); }

inline bool verify_periodic(const PeriodicColoring& c, const ParameterMatrix& m) {
    if (m.size() != c.colors()) return false;
    auto inferred = infer_matrix(c);
    return inferred.has_value() && inferred.value() == m;
}

// ---------------------------------------------------------------------------
// Period transformations

inline PeriodicColoring rotated(const PeriodicColoring& c, int shift) {
    std::vector<BlockProfile> p;
    p.reserve(c.length());
    for (int i = 0; i < c.length(); ++i) p.push_back(c.block(static_cast<long long>(i) + shift));
    return {c.family(), std::move(p)};
}

inline PeriodicColoring reflected(const PeriodicColoring& c) {
    auto p = c.period();
    std::reverse(p.begin(), p.end());
    return {c.family(), std::move(p)};
}

inline PeriodicColoring repeated(const PeriodicColoring& c, int times) {
    if (times < 1) throw DomainError("repeat count must be >= 1");
    std::vector<BlockProfile> p;
    for (int t = 0; t < times; ++t) p.insert(p.end(), c.period().begin(), c.period().end());
    return {c.family(), std::move(p)};
}

/// Relabels color j as perm[j]; perm must be a permutation of 0..k-1.
inline PeriodicColoring renamed(const PeriodicColoring& c, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != c.colors()) throw DomainError("permutation size mismatch");
    std::vector<BlockProfile> p;
    for (const auto& b : c.period()) {
        std::vector<int> counts(c.colors(), 0);
        for (int j = 0; j < c.colors(); ++j) counts.at(perm[j]) += b[j];
        p.emplace_back(std::move(counts));
    }
    return {c.family(), std::move(p)};
}

/// Length of the smallest repeating unit of the period.
inline int primitive_period(const PeriodicColoring& c) {
    const int p = c.length();
    for (int d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (int i = d; i < p && ok; ++i) ok = c.period()[i] == c.period()[i - d];
        if (ok) return d;
    }
    return p;
}

inline PeriodicColoring primitive_root(const PeriodicColoring& c) {
    const int d = primitive_period(c);
    if (d == c.length()) return c;
    return {c.family(), std::vector<BlockProfile>(c.period().begin(), c.period().begin() + d)};
}

namespace detail {

// Row-major flattening of a period after relabeling colors so that the color
// columns (N_j(0), ..., N_j(p-1)) are in non-increasing lexicographic order.
// Colors with equal columns are interchangeable, so this relabeling is a
// function of the block sequence alone.
inline std::vector<int> column_sorted_encoding(const std::vector<const BlockProfile*>& blocks, int k) {
    const std::size_t p = blocks.size();
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        for (std::size_t i = 0; i < p; ++i) {
            int x = (*blocks[i])[a], y = (*blocks[i])[b];
            if (x != y) return x > y;
        }
        return false;
    });
    std::vector<int> enc;
    enc.reserve(p * k);
    for (std::size_t i = 0; i < p; ++i)
        for (int j = 0; j < k; ++j) enc.push_back((*blocks[i])[order[j]]);
    return enc;
}

}  // namespace detail

/// Canonical representative under rotation, reflection, reduction to the
/// primitive period and renaming of colors.
///
/// Encoding order: for a fixed block sequence, colors are renamed so that
/// their count columns are lexicographically non-increasing (block 0 first);
/// the period is then flattened block by block, color by color. The canonical
/// form is the lexicographically least such flattening over all rotations and
/// reflections of the primitive period.
inline PeriodicColoring canonicalize(const PeriodicColoring& c) {
    const PeriodicColoring root = primitive_root(c);
    const int p = root.length();
    const int k = root.colors();
    std::vector<int> best;
    std::vector<const BlockProfile*> blocks(p);
    for (int dir = 0; dir < 2; ++dir) {
        for (int s = 0; s < p; ++s) {
            for (int i = 0; i < p; ++i) {
                int idx = dir == 0 ? (s + i) % p : ((s - i) % p + p) % p;
                blocks[i] = &root.period()[idx];
            }
            auto enc = detail::column_sorted_encoding(blocks, k);
            if (best.empty() || enc < best) best = std::move(enc);
        }
    }
    std::vector<BlockProfile> period;
    period.reserve(p);
    for (int i = 0; i < p; ++i)
        period.emplace_back(std::vector<int>(best.begin() + i * k, best.begin() + (i + 1) * k));
    return {root.family(), std::move(period)};
}

inline bool equivalent_up_to_symmetry(const PeriodicColoring& a, const PeriodicColoring& b) {
    return canonicalize(a) == canonicalize(b);
}

inline bool is_block_monochrome(const PeriodicColoring& c) {
    for (const auto& b : c.period())
        if (b.support().size() != 1) return false;
    return true;
}

/// Color of each block of a block-monochrome coloring.
inline std::vector<int> block_colors(const PeriodicColoring& c) {
    std::vector<int> out;
    for (const auto& b : c.period()) {
        auto s = b.support();
        if (s.size() != 1) throw PreconditionViolated("coloring is not block-monochrome");
        out.push_back(s.front());
    }
    return out;
}

/// The path coloring of C_inf whose blocks carry the colors of a
/// block-monochrome multipath coloring.
inline PeriodicColoring underlying_path(const PeriodicColoring& c) {
    return PeriodicColoring::block_monochrome(Family::path(), block_colors(c));
}

/// Labeled vertex colors of each block: within a block, vertex indices
/// 0..n-1 receive colors in non-decreasing order.
inline std::vector<std::vector<int>> vertex_labels(const PeriodicColoring& c) {
    std::vector<std::vector<int>> out;
    for (const auto& b : c.period()) {
        std::vector<int> labels;
        for (int j = 0; j < c.colors(); ++j) labels.insert(labels.end(), b[j], j);
        out.push_back(std::move(labels));
    }
    return out;
}

}  // namespace percol
