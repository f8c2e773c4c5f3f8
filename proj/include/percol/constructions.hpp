#pragma once

// Constructive families of perfect colorings of C_inf . K_n and
// C_inf . complement(K_n), plus deterministic restoration from two blocks.

#include <map>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "percol/errors.hpp"
#include "percol/multipath.hpp"

namespace percol {

// ---------------------------------------------------------------------------
// Perfect colorings of the infinite path

enum class SeriesKind { Cyclic, Mirror11, Mirror12, Mirror22 };

inline std::string to_string(SeriesKind s) {
    switch (s) {
        case SeriesKind::Cyclic: return "S";
        case SeriesKind::Mirror11: return "S11";
        case SeriesKind::Mirror12: return "S12";
        case SeriesKind::Mirror22: return "S22";
    }
    return "?";
}

inline constexpr SeriesKind kAllSeries[] = {SeriesKind::Cyclic, SeriesKind::Mirror11, SeriesKind::Mirror12,
                                            SeriesKind::Mirror22};

/// Period length of the k-color member of a series.
inline int series_period_length(SeriesKind s, int k) {
    switch (s) {
        case SeriesKind::Cyclic: return k;
        case SeriesKind::Mirror11: return 2 * k - 2;
        case SeriesKind::Mirror12: return 2 * k - 1;
        case SeriesKind::Mirror22: return 2 * k;
    }
    return 0;
}

inline int series_min_colors(SeriesKind s) { return s == SeriesKind::Cyclic ? 1 : 2; }

/// [0 1 ... k-1]
inline PeriodicColoring series_cyclic(int k) {
    if (k < 1) throw DomainError("cyclic series needs k >= 1");
    std::vector<int> colors(k);
    std::iota(colors.begin(), colors.end(), 0);
    return PeriodicColoring::block_monochrome(Family::path(), colors);
}

/// S11(k) = [k-1 ... 1 0 1 ... k-2]
/// S12(k) = [k-1 ... 1 0 1 ... k-1]
/// S22(k) = [k-1 ... 1 0 0 1 ... k-1]
inline PeriodicColoring series_mirror(int k, SeriesKind type) {
    if (type == SeriesKind::Cyclic) throw DomainError("series_mirror needs a mirror type");
    if (k < 2) throw DomainError(to_string(type) + " needs k >= 2");
    std::vector<int> colors;
    for (int c = k - 1; c >= 0; --c) colors.push_back(c);
    const int top = type == SeriesKind::Mirror11 ? k - 2 : k - 1;
    for (int c = type == SeriesKind::Mirror22 ? 0 : 1; c <= top; ++c) colors.push_back(c);
    return PeriodicColoring::block_monochrome(Family::path(), colors);
}

inline PeriodicColoring series_member(SeriesKind s, int k) {
    return s == SeriesKind::Cyclic ? series_cyclic(k) : series_mirror(k, s);
}

// ---------------------------------------------------------------------------
// Block-monochrome lifts and disjunctive colorings

/// Copies each path vertex's color onto a whole block of `family`.
inline PeriodicColoring lift_block_monochrome(const PeriodicColoring& path, Family family) {
    if (path.family() != Family::path()) throw PreconditionViolated("lift expects a coloring of the plain path (empty, n=1)");
    std::vector<BlockProfile> period;
    for (const auto& b : path.period()) {
        std::vector<int> counts(b.counts());
        for (int& x : counts) x *= family.n;
        period.emplace_back(std::move(counts));
    }
    PeriodicColoring out(family, std::move(period));
    if (is_perfect(path) != is_perfect(out)) throw InternalError("lift changed perfectness: " + out.str());
    return out;
}

class OverlappingSupports : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

class PsiNotPerfect : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

/// Block i receives profiles[psi(i)]. Profiles are count vectors over one
/// shared color space and must have pairwise disjoint supports.
inline PeriodicColoring disjunctive_multipath(const PeriodicColoring& psi, const std::vector<BlockProfile>& profiles,
                                              Family family) {
    if (psi.family() != Family::path()) throw PreconditionViolated("psi must color the plain path (empty, n=1)");
    if (!is_perfect(psi)) throw PsiNotPerfect("psi is not a perfect coloring of the path");
    if (static_cast<int>(profiles.size()) != psi.colors())
        throw PreconditionViolated("need one block profile per color of psi");
    int width = 0;
    for (const auto& b : profiles) {
        if (b.total() != family.n) throw PreconditionViolated("block profile " + b.str() + " does not sum to n");
        width = std::max(width, b.colors());
    }
    std::vector<int> owner(width, -1);
    for (std::size_t p = 0; p < profiles.size(); ++p)
        for (int j : profiles[p].support()) {
            if (owner[j] >= 0)
                throw OverlappingSupports("color " + std::to_string(j) + " is used by the profiles of psi-colors " +
                                          std::to_string(owner[j]) + " and " + std::to_string(p));
            owner[j] = static_cast<int>(p);
        }
    std::vector<BlockProfile> period;
    for (int c : block_colors(psi)) period.push_back(profiles[c].resized(width));
    auto out = PeriodicColoring::normalized(family, period);
    if (!is_perfect(out)) throw InternalError("disjunctive coloring is not perfect: " + out.str());
    return out;
}

// ---------------------------------------------------------------------------
// Semicolorings of the bipartite empty-block multipath

enum class Parity { Even, Odd };

inline std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Profiles of the blocks of one part (even or odd block indices), in order.
struct Semicoloring {
    Parity parity = Parity::Even;
    int n = 1;
    std::vector<BlockProfile> period;

    Semicoloring() = default;
    Semicoloring(Parity par, int block_size, std::vector<BlockProfile> profiles)
        : parity(par), n(block_size), period(std::move(profiles)) {
        if (n < 1) throw DomainError("block size n must be >= 1");
        if (period.empty()) throw InvalidColoring("semicoloring period must be nonempty");
        for (const auto& b : period)
            if (b.total() != n) throw InvalidColoring("semicoloring profile " + b.str() + " does not sum to n");
    }

    Family family() const { return Family::empty(n); }
    int colors() const {
        int w = 0;
        for (const auto& b : period) w = std::max(w, b.colors());
        return w;
    }
    friend bool operator==(const Semicoloring&, const Semicoloring&) = default;
};

/// Interleaves two semicolorings: block 2t is even[t], block 2t+1 is odd[t]
/// (indices modulo the part periods), over lcm of the part periods.
inline PeriodicColoring interleave(const Semicoloring& even, const Semicoloring& odd) {
    if (even.parity != Parity::Even || odd.parity != Parity::Odd)
        throw PreconditionViolated("conjugation takes an even and an odd semicoloring, in that order");
    if (even.n != odd.n) throw PreconditionViolated("semicolorings have different block sizes");
    const int width = std::max(even.colors(), odd.colors());
    const std::size_t pe = even.period.size(), po = odd.period.size();
    const std::size_t half = std::lcm(pe, po);
    std::vector<BlockProfile> period;
    for (std::size_t t = 0; t < half; ++t) {
        period.push_back(even.period[t % pe].resized(width));
        period.push_back(odd.period[t % po].resized(width));
    }
    return PeriodicColoring::normalized(Family::empty(even.n), period);
}

inline Result<PeriodicColoring, NotPerfect> conjugate_semicolorings(const Semicoloring& even, const Semicoloring& odd) {
    auto c = interleave(even, odd);
    auto m = infer_matrix(c);
    if (!m) return m.error();
    return c;
}

/// The two semicolorings of an even-length coloring of an empty-block family.
inline std::pair<Semicoloring, Semicoloring> split_semicolorings(const PeriodicColoring& c) {
    if (c.family().kind != BlockKind::Empty) throw PreconditionViolated("only empty-block multipaths are bipartite");
    const int len = c.length() % 2 == 0 ? c.length() : 2 * c.length();
    std::vector<BlockProfile> even, odd;
    for (int i = 0; i < len; ++i) (i % 2 == 0 ? even : odd).push_back(c.block(i));
    auto shrink = [](std::vector<BlockProfile> v) {
        for (std::size_t d = 1; d < v.size(); ++d) {
            if (v.size() % d) continue;
            bool ok = true;
            for (std::size_t i = d; i < v.size() && ok; ++i) ok = v[i] == v[i - d];
            if (ok) return std::vector<BlockProfile>(v.begin(), v.begin() + static_cast<long>(d));
        }
        return v;
    };
    return {Semicoloring(Parity::Even, c.family().n, shrink(std::move(even))),
            Semicoloring(Parity::Odd, c.family().n, shrink(std::move(odd)))};
}

/// N_j(i-1) + N_j(i+1) = N_j(i) + N_j(i+2) for every color j and block i of a
/// 4-periodic coloring. Primitive periods of length 1 or 2 are repeated up
/// to 4; other lengths are rejected.
inline bool matched_check(const PeriodicColoring& c) {
    if (c.family().kind != BlockKind::Empty) throw PreconditionViolated("matched condition is defined for empty blocks");
    const int p = primitive_period(c);
    if (4 % p != 0)
        throw DomainError("matched condition needs a period of length 4 (primitive period is " + std::to_string(p) + ")");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < c.colors(); ++j)
            if (c.block(i - 1)[j] + c.block(i + 1)[j] != c.block(i)[j] + c.block(i + 2)[j]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Complete-block 3-periodic colorings

inline Result<PeriodicColoring, NotPerfect> three_periodic_complete(const BlockProfile& b0, const BlockProfile& b1,
                                                                    const BlockProfile& b2, int n) {
    auto c = PeriodicColoring::normalized(Family::complete(n), {b0, b1, b2});
    auto m = infer_matrix(c);
    if (!m) return m.error();
    return c;
}

// ---------------------------------------------------------------------------
// Restoration from two adjacent blocks

/// A step of the recurrence produced no valid block.
struct Contradiction {
    long long block = 0;                    // index of the block that could not be produced
    std::string reason;
    std::vector<std::vector<int>> trace;    // blocks 0..block; the last entry is the offending vector
};

/// The forward orbit entered a cycle that does not contain the seed pair.
struct NotBiInfinite {
    long long cycle_start = 0;
    long long cycle_length = 0;
};

using Propagation = std::variant<PeriodicColoring, NotBiInfinite, Contradiction>;

namespace detail {
inline long long binomial(long long n, long long r) {
    long long out = 1;
    for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}
}  // namespace detail

/// Number of block profiles with k colors summing to n.
inline long long profile_count(int n, int k) { return detail::binomial(n + k - 1, k - 1); }

/// Restores the coloring forced by parameter matrix `m` and the seed blocks
/// b0, b1. For a color c of block i:
///   empty blocks:    N(i+1) = row_c - N(i-1)
///   complete blocks: N(i+1) = row_c - N(i-1) - N(i) + e_c
/// and every color of block i must force the same N(i+1).
inline Propagation propagate(const ParameterMatrix& m, const BlockProfile& b0, const BlockProfile& b1, Family family) {
    const int k = m.size();
    if (b0.colors() > k || b1.colors() > k) throw PreconditionViolated("seed profile has more colors than the matrix");
    if (b0.total() != family.n || b1.total() != family.n) throw PreconditionViolated("seed profiles must sum to n");
    std::vector<std::vector<int>> trace{b0.resized(k).counts(), b1.resized(k).counts()};
    std::map<std::pair<std::vector<int>, std::vector<int>>, long long> seen;
    seen.emplace(std::make_pair(trace[0], trace[1]), 0);
    const long long bound = profile_count(family.n, k) * profile_count(family.n, k) + 1;

    for (long long i = 1; i <= bound; ++i) {
        const auto& prev = trace[i - 1];
        const auto& cur = trace[i];
        std::vector<int> next;
        int forcing = -1;
        for (int c = 0; c < k; ++c) {
            if (cur[c] == 0) continue;
            std::vector<int> cand(k);
            for (int j = 0; j < k; ++j) {
                cand[j] = m(c, j) - prev[j];
                if (family.kind == BlockKind::Complete) cand[j] -= cur[j] - (j == c ? 1 : 0);
            }
            if (forcing < 0) {
                next = std::move(cand);
                forcing = c;
            } else if (cand != next) {
                trace.push_back(std::move(cand));
                return Contradiction{i + 1,
                                     "colors " + std::to_string(forcing) + " and " + std::to_string(c) + " of block " +
                                         std::to_string(i) + " force different successors",
                                     std::move(trace)};
            }
        }
        const long long sum = std::accumulate(next.begin(), next.end(), 0LL);
        const bool negative = std::any_of(next.begin(), next.end(), [](int x) { return x < 0; });
        trace.push_back(next);
        if (negative) return Contradiction{i + 1, "negative count in block " + std::to_string(i + 1), std::move(trace)};
        if (sum != family.n)
            return Contradiction{i + 1,
                                 "block " + std::to_string(i + 1) + " has " + std::to_string(sum) + " vertices",
                                 std::move(trace)};

        auto [it, fresh] = seen.emplace(std::make_pair(trace[i], trace[i + 1]), i);
        if (fresh) continue;
        if (it->second != 0) return NotBiInfinite{it->second, i - it->second};
        std::vector<BlockProfile> period;
        for (long long t = 0; t < i; ++t) period.emplace_back(trace[t]);
        return PeriodicColoring::normalized(family, period);
    }
    throw InternalError("propagation exceeded the state-space bound of " + std::to_string(bound) + " steps");
}

}  // namespace percol
