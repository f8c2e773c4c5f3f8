#pragma once

// Catalogs of perfect colorings of the multipath graphs within (colors,
// period) bounds, built two independent ways:
//
//   brute_force_enumerate  depth-first search over block-profile sequences
//                          with row-consistency pruning, no structure theory;
//   theorem_enumerate      expansion of the classification: disjunctive
//                          colorings over the four path series, conjugated
//                          2-periodic semicolorings (empty blocks) and
//                          3-periodic colorings (complete blocks).
//
// Both produce canonical, primitive, deduplicated entries so that the two
// catalogs can be compared with catalog_diff.

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "percol/constructions.hpp"
#include "percol/errors.hpp"
#include "percol/multipath.hpp"

namespace percol {

// ---------------------------------------------------------------------------
// Classification

enum class ClassLabel { Disjunctive, NonDisjunctiveBipartite, NonDisjunctiveMatched, NonDisjunctiveThreePeriodic };

inline constexpr ClassLabel kAllLabels[] = {ClassLabel::Disjunctive, ClassLabel::NonDisjunctiveBipartite,
                                            ClassLabel::NonDisjunctiveMatched,
                                            ClassLabel::NonDisjunctiveThreePeriodic};

inline std::string to_string(ClassLabel l) {
    switch (l) {
        case ClassLabel::Disjunctive: return "disjunctive";
        case ClassLabel::NonDisjunctiveBipartite: return "non_disjunctive_bipartite";
        case ClassLabel::NonDisjunctiveMatched: return "non_disjunctive_matched";
        case ClassLabel::NonDisjunctiveThreePeriodic: return "non_disjunctive_three_periodic";
    }
    return "?";
}

inline std::optional<ClassLabel> class_label_from_string(const std::string& s) {
    for (auto l : kAllLabels)
        if (to_string(l) == s) return l;
    return std::nullopt;
}

/// psi . Phi: a perfect path coloring and one block profile per path color.
struct DisjunctiveEvidence {
    PeriodicColoring path;
    std::vector<BlockProfile> profiles;
};

/// Two 2-periodic semicolorings whose conjugation is the coloring.
struct SemicoloringEvidence {
    Semicoloring even;
    Semicoloring odd;
};

/// A three-block period.
struct ThreeBlockEvidence {
    BlockProfile b0, b1, b2;
};

struct ColoringClass {
    ClassLabel label;
    std::variant<DisjunctiveEvidence, SemicoloringEvidence, ThreeBlockEvidence> evidence;
};

/// A perfect coloring outside every class of the classification.
struct Unclassifiable {
    std::string reason;
};

namespace detail {

// Disjunctive iff blocks with equal support have equal profiles, distinct
// supports are disjoint, and the support pattern is a perfect path coloring.
inline std::optional<DisjunctiveEvidence> disjunctive_decomposition(const PeriodicColoring& c) {
    std::vector<std::vector<int>> supports;
    std::vector<BlockProfile> profiles;
    std::vector<int> path_colors;
    std::vector<int> owner(c.colors(), -1);
    for (const auto& b : c.period()) {
        auto s = b.support();
        auto it = std::find(supports.begin(), supports.end(), s);
        if (it != supports.end()) {
            auto idx = static_cast<std::size_t>(it - supports.begin());
            if (profiles[idx] != b) return std::nullopt;
            path_colors.push_back(static_cast<int>(idx));
            continue;
        }
        const int idx = static_cast<int>(supports.size());
        for (int j : s) {
            if (owner[j] >= 0) return std::nullopt;
            owner[j] = idx;
        }
        supports.push_back(std::move(s));
        profiles.push_back(b);
        path_colors.push_back(idx);
    }
    auto path = PeriodicColoring::block_monochrome(Family::path(), path_colors);
    if (!is_perfect(path)) return std::nullopt;
    return DisjunctiveEvidence{std::move(path), std::move(profiles)};
}

}  // namespace detail

/// Reassembles the coloring described by a class's evidence.
inline PeriodicColoring reconstruct(const ColoringClass& cls, Family family) {
    return std::visit(
        [&](const auto& ev) -> PeriodicColoring {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, DisjunctiveEvidence>) {
                return disjunctive_multipath(ev.path, ev.profiles, family);
            } else if constexpr (std::is_same_v<T, SemicoloringEvidence>) {
                return interleave(ev.even, ev.odd);
            } else {
                return PeriodicColoring::normalized(family, {ev.b0, ev.b1, ev.b2});
            }
        },
        cls.evidence);
}

inline Result<ColoringClass, Unclassifiable> classify(const PeriodicColoring& c) {
    if (!is_perfect(c)) throw PreconditionViolated("classify expects a perfect coloring");
    const PeriodicColoring root = primitive_root(c);
    if (auto ev = detail::disjunctive_decomposition(root)) return ColoringClass{ClassLabel::Disjunctive, std::move(*ev)};

    const int p = root.length();
    if (root.family().kind == BlockKind::Empty) {
        if (4 % p != 0)
            return Unclassifiable{"non-disjunctive empty-block coloring with primitive period " + std::to_string(p)};
        const int n = root.family().n;
        Semicoloring even(Parity::Even, n, {root.block(0), root.block(2)});
        Semicoloring odd(Parity::Odd, n, {root.block(1), root.block(3)});
        std::vector<bool> in_even(root.colors(), false);
        for (const auto& b : even.period)
            for (int j : b.support()) in_even[j] = true;
        bool shared = false;
        for (const auto& b : odd.period)
            for (int j : b.support()) shared = shared || in_even[j];
        SemicoloringEvidence ev{std::move(even), std::move(odd)};
        if (!shared) return ColoringClass{ClassLabel::NonDisjunctiveBipartite, std::move(ev)};
        if (matched_check(root)) return ColoringClass{ClassLabel::NonDisjunctiveMatched, std::move(ev)};
        return Unclassifiable{"non-disjunctive, non-bipartite 4-periodic coloring whose semicolorings are not matched"};
    }
    if (p == 3 || p == 1)
        return ColoringClass{ClassLabel::NonDisjunctiveThreePeriodic,
                             ThreeBlockEvidence{root.block(0), root.block(1), root.block(2)}};
    return Unclassifiable{"non-disjunctive complete-block coloring with primitive period " + std::to_string(p)};
}

// ---------------------------------------------------------------------------
// Path series membership

/// Which series member (kind, k) a perfect path coloring is, if any.
inline std::optional<std::pair<SeriesKind, int>> identify_series(const PeriodicColoring& path) {
    if (path.family() != Family::path()) return std::nullopt;
    const auto canon = canonicalize(path);
    const int k = path.colors();
    for (auto s : kAllSeries) {
        if (k < series_min_colors(s)) continue;
        if (canonicalize(series_member(s, k)) == canon) return std::make_pair(s, k);
    }
    return std::nullopt;
}

/// Block-monochrome and its block colors form one of the four path series.
inline bool is_series_lift(const PeriodicColoring& c) {
    return is_block_monochrome(c) && identify_series(underlying_path(c)).has_value();
}

// ---------------------------------------------------------------------------
// Catalogs

struct Bounds {
    int max_colors = 1;
    int max_period = 1;
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct SearchOptions {
    unsigned long long budget = 100'000'000ULL;
    int jobs = 1;
};

struct CatalogEntry {
    PeriodicColoring coloring;
    ParameterMatrix matrix;
    std::optional<ClassLabel> label;  // empty: unclassifiable
};

class Catalog {
public:
    Catalog(Family family, Bounds bounds) : family_(family), bounds_(bounds) {}

    /// Builds entries (matrix and class) for a set of canonical colorings.
    Catalog(Family family, Bounds bounds, const std::set<PeriodicColoring>& colorings) : Catalog(family, bounds) {
        for (const auto& c : colorings) add(c);
    }

    /// Inserts canonicalize(c); c must be perfect. Returns false on duplicates.
    bool add(const PeriodicColoring& c) {
        auto canon = canonicalize(c);
        if (canon.family() != family_) throw PreconditionViolated("catalog family mismatch");
        auto m = infer_matrix(canon);
        if (!m) throw PreconditionViolated("catalog entries must be perfect: " + canon.str());
        auto pos = std::lower_bound(entries_.begin(), entries_.end(), canon,
                                    [](const CatalogEntry& e, const PeriodicColoring& x) { return e.coloring < x; });
        if (pos != entries_.end() && pos->coloring == canon) return false;
        auto cls = classify(canon);
        std::optional<ClassLabel> label;
        if (cls) label = cls->label;
        entries_.insert(pos, CatalogEntry{canon, *m, label});
        return true;
    }

    const Family& family() const { return family_; }
    const Bounds& bounds() const { return bounds_; }
    /// Sorted by canonical coloring.
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    bool contains(const PeriodicColoring& c) const {
        auto canon = canonicalize(c);
        return std::binary_search(entries_.begin(), entries_.end(), canon, [](const auto& a, const auto& b) {
            if constexpr (std::is_same_v<std::decay_t<decltype(a)>, CatalogEntry>) {
                if constexpr (std::is_same_v<std::decay_t<decltype(b)>, CatalogEntry>) return a.coloring < b.coloring;
                else return a.coloring < b;
            } else {
                if constexpr (std::is_same_v<std::decay_t<decltype(b)>, CatalogEntry>) return a < b.coloring;
                else return a < b;
            }
        });
    }

    std::map<ClassLabel, std::size_t> class_counts() const {
        std::map<ClassLabel, std::size_t> out;
        for (const auto& e : entries_)
            if (e.label) ++out[*e.label];
        return out;
    }

    std::size_t unclassifiable_count() const {
        return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return !e.label; }));
    }

private:
    Family family_;
    Bounds bounds_;
    std::vector<CatalogEntry> entries_;
};

struct CatalogDiff {
    std::vector<PeriodicColoring> only_in_a;
    std::vector<PeriodicColoring> only_in_b;
    bool identical() const { return only_in_a.empty() && only_in_b.empty(); }
};

inline CatalogDiff catalog_diff(const Catalog& a, const Catalog& b) {
    if (a.family() != b.family()) throw BoundsMismatch("catalogs describe different families");
    if (a.bounds() != b.bounds()) throw BoundsMismatch("catalogs were built with different bounds");
    CatalogDiff d;
    auto less = [](const CatalogEntry& x, const CatalogEntry& y) { return x.coloring < y.coloring; };
    std::vector<CatalogEntry> only_a, only_b;
    std::set_difference(a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end(),
                        std::back_inserter(only_a), less);
    std::set_difference(b.entries().begin(), b.entries().end(), a.entries().begin(), a.entries().end(),
                        std::back_inserter(only_b), less);
    for (auto& e : only_a) d.only_in_a.push_back(e.coloring);
    for (auto& e : only_b) d.only_in_b.push_back(e.coloring);
    return d;
}

namespace detail {

inline void check_bounds(Bounds b) {
    if (b.max_colors < 1) throw DomainError("max colors must be >= 1, got " + std::to_string(b.max_colors));
    if (b.max_period < 1) throw DomainError("max period must be >= 1, got " + std::to_string(b.max_period));
}

/// All count vectors of length k summing to n, in lexicographic order.
inline std::vector<std::vector<int>> all_profiles(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 0);
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (j == k - 1) {
            cur[j] = left;
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[j] = x;
            self(self, j + 1, left - x);
        }
    };
    rec(rec, 0, n);
    return out;
}

class BudgetCounter {
public:
    explicit BudgetCounter(unsigned long long budget) : budget_(budget) {}
    void tick(unsigned long long amount = 1) {
        if (visited_.fetch_add(amount, std::memory_order_relaxed) + amount > budget_) throw BudgetExceeded(budget_);
    }
    unsigned long long visited() const { return visited_.load(); }

private:
    unsigned long long budget_;
    std::atomic<unsigned long long> visited_{0};
};

// Depth-first search over profile sequences. Colors are introduced in
// restricted-growth order: a block may only add the next unused colors, and
// the counts of the colors it introduces are non-increasing. Every orbit
// under renaming contains such a sequence; remaining duplicates are removed
// by canonicalization.
class OracleSearch {
public:
    OracleSearch(Family family, Bounds bounds, BudgetCounter& budget)
        : family_(family), k_(bounds.max_colors), max_len_(bounds.max_period), budget_(budget),
          profiles_(all_profiles(family.n, bounds.max_colors)) {
        const int q = static_cast<int>(profiles_.size());
        admissible_.assign(k_ + 1, std::vector<int>(q, -1));
        for (int u = 0; u <= k_; ++u)
            for (int i = 0; i < q; ++i) {
                const auto& pr = profiles_[i];
                int j = u;
                while (j < k_ && pr[j] > 0 && (j == u || pr[j] <= pr[j - 1])) ++j;
                bool ok = true;
                for (int r = j; r < k_; ++r)
                    if (pr[r] > 0) ok = false;
                if (ok) admissible_[u][i] = j;
            }
        rows_.assign(k_, std::vector<int>(k_, 0));
        row_depth_.assign(k_, -1);
    }

    /// Admissible first two blocks (profile indices), used to split the work.
    std::vector<std::pair<int, int>> seed_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < static_cast<int>(profiles_.size()); ++a) {
            int u = admissible_[0][a];
            if (u < 0) continue;
            for (int b = 0; b < static_cast<int>(profiles_.size()); ++b)
                if (admissible_[u][b] >= 0) out.emplace_back(a, b);
        }
        return out;
    }

    /// Period-1 solutions.
    void run_single_blocks(std::set<PeriodicColoring>& out) {
        out_ = &out;
        for (int a = 0; a < static_cast<int>(profiles_.size()); ++a) {
            int u = admissible_[0][a];
            if (u < 0) continue;
            budget_.tick();
            push(a, u);
            if (closure_ok()) record();
            pop();
        }
    }

    /// All solutions of length >= 2 starting with blocks a, b.
    void run_from_pair(int a, int b, std::set<PeriodicColoring>& out) {
        if (max_len_ < 2) return;
        out_ = &out;
        push(a, admissible_[0][a]);
        budget_.tick();
        if (place(b)) {
            explore();
            unplace();
        }
        pop();
    }

private:
    void push(int profile, int used) {
        seq_.push_back(profile);
        used_.push_back(used);
    }
    void pop() {
        seq_.pop_back();
        used_.pop_back();
    }

    const std::vector<int>& at(int i) const { return profiles_[seq_[i]]; }

    // Checks the block at index i against the recorded rows using neighbor
    // blocks l and r; records new rows at the current depth.
    bool check_block(int i, int l, int r) {
        const auto& here = at(i);
        const auto& left = at(l);
        const auto& right = at(r);
        const int depth = static_cast<int>(seq_.size());
        for (int c = 0; c < k_; ++c) {
            if (here[c] == 0) continue;
            sphere_.assign(k_, 0);
            for (int j = 0; j < k_; ++j) {
                sphere_[j] = left[j] + right[j];
                if (family_.kind == BlockKind::Complete) sphere_[j] += here[j];
            }
            if (family_.kind == BlockKind::Complete) sphere_[c] -= 1;
            if (row_depth_[c] < 0) {
                rows_[c] = sphere_;
                row_depth_[c] = depth;
            } else if (rows_[c] != sphere_) {
                return false;
            }
        }
        return true;
    }

    void undo_rows(int depth) {
        for (int c = 0; c < k_; ++c)
            if (row_depth_[c] >= depth) row_depth_[c] = -1;
    }

    // Appends a block and checks the newly interior block.
    bool place(int profile) {
        int u = admissible_[used_.back()][profile];
        if (u < 0) return false;
        push(profile, u);
        const int len = static_cast<int>(seq_.size());
        if (len >= 3 && !check_block(len - 2, len - 3, len - 1)) {
            unplace();
            return false;
        }
        return true;
    }

    void unplace() {
        undo_rows(static_cast<int>(seq_.size()));
        pop();
    }

    void explore() {
        if (closure_ok()) record();
        if (static_cast<int>(seq_.size()) >= max_len_) return;
        for (int q = 0; q < static_cast<int>(profiles_.size()); ++q) {
            if (admissible_[used_.back()][q] < 0) continue;
            budget_.tick();
            if (!place(q)) continue;
            explore();
            unplace();
        }
    }

    // Wraparound check of blocks 0 and len-1, leaving the rows untouched.
    bool closure_ok() {
        const int len = static_cast<int>(seq_.size());
        auto saved_rows = rows_;
        auto saved_depth = row_depth_;
        bool ok = check_block(0, len - 1, 1 % len);
        if (ok && len > 1) ok = check_block(len - 1, len - 2 >= 0 ? len - 2 : 0, 0);
        rows_ = std::move(saved_rows);
        row_depth_ = std::move(saved_depth);
        return ok;
    }

    bool primitive() const {
        const int len = static_cast<int>(seq_.size());
        for (int d = 1; d < len; ++d) {
            if (len % d) continue;
            bool same = true;
            for (int i = d; i < len && same; ++i) same = seq_[i] == seq_[i - d];
            if (same) return false;
        }
        return true;
    }

    void record() {
        if (!primitive()) return;
        const int used = used_.back();
        std::vector<BlockProfile> period;
        for (int i = 0; i < static_cast<int>(seq_.size()); ++i)
            period.emplace_back(std::vector<int>(at(i).begin(), at(i).begin() + used));
        out_->insert(canonicalize(PeriodicColoring(family_, std::move(period))));
    }

    Family family_;
    int k_;
    int max_len_;
    BudgetCounter& budget_;
    std::vector<std::vector<int>> profiles_;
    std::vector<std::vector<int>> admissible_;  // [used][profile] -> used after, or -1
    std::vector<int> seq_;
    std::vector<int> used_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_depth_;
    std::vector<int> sphere_;
    std::set<PeriodicColoring>* out_ = nullptr;
};

}  // namespace detail

/// Every canonical perfect coloring of `family` with at most max_colors
/// colors and primitive period at most max_period, by exhaustive search.
inline Catalog brute_force_enumerate(Family family, Bounds bounds, SearchOptions options = {}) {
    detail::check_bounds(bounds);
    detail::BudgetCounter budget(options.budget);
    std::set<PeriodicColoring> found;
    {
        detail::OracleSearch search(family, bounds, budget);
        search.run_single_blocks(found);
    }
    const auto seeds = detail::OracleSearch(family, bounds, budget).seed_pairs();
    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(seeds.size())));

    // Workers own disjoint slices of the seed pairs; results merge by union.
    std::vector<std::set<PeriodicColoring>> partial(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](int w) {
        try {
            detail::OracleSearch search(family, bounds, budget);
            for (std::size_t s = w; s < seeds.size(); s += jobs)
                search.run_from_pair(seeds[s].first, seeds[s].second, partial[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& part : partial) found.insert(part.begin(), part.end());
    return Catalog(family, bounds, found);
}

/// Canonical members of the four path series within bounds.
inline std::set<PeriodicColoring> series_catalog(Bounds bounds) {
    detail::check_bounds(bounds);
    std::set<PeriodicColoring> out;
    for (auto s : kAllSeries)
        for (int k = series_min_colors(s); k <= bounds.max_colors; ++k)
            if (series_period_length(s, k) <= bounds.max_period) out.insert(canonicalize(series_member(s, k)));
    return out;
}

namespace detail {

/// Integer partitions of n into exactly `parts` positive parts, non-increasing.
inline std::vector<std::vector<int>> partitions_into(int n, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int slots, int cap) -> void {
        if (slots == 0) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int x = std::min(left, cap); x >= 1; --x) {
            if (left - x < slots - 1) continue;
            cur.push_back(x);
            self(self, left - x, slots - 1, x);
            cur.pop_back();
        }
    };
    rec(rec, n, parts, n);
    return out;
}

inline bool within(const PeriodicColoring& c, Bounds b) {
    return c.colors() <= b.max_colors && primitive_period(c) <= b.max_period;
}

inline void add_disjunctive(Family family, Bounds bounds, BudgetCounter& budget, std::set<PeriodicColoring>& out) {
    // One partition of n per path color; each part becomes a fresh color.
    std::vector<std::vector<int>> options;  // all partitions of n, any number of parts
    for (int parts = 1; parts <= std::min(family.n, bounds.max_colors); ++parts)
        for (auto& p : partitions_into(family.n, parts)) options.push_back(std::move(p));

    for (const auto& psi : series_catalog(bounds)) {
        const int kp = psi.colors();
        std::vector<int> choice(kp, 0);
        auto assign = [&](auto&& self, int p, int total) -> void {
            if (p == kp) {
                std::vector<BlockProfile> profiles;
                int next = 0;
                for (int q = 0; q < kp; ++q) {
                    std::vector<int> counts(total, 0);
                    for (int part : options[choice[q]]) counts[next++] = part;
                    profiles.emplace_back(std::move(counts));
                }
                budget.tick();
                auto c = disjunctive_multipath(psi, profiles, family);
                if (within(c, bounds)) out.insert(canonicalize(c));
                return;
            }
            for (int o = 0; o < static_cast<int>(options.size()); ++o) {
                const int t = total + static_cast<int>(options[o].size());
                if (t + (kp - p - 1) > bounds.max_colors) continue;
                choice[p] = o;
                self(self, p + 1, t);
            }
        };
        assign(assign, 0, 0);
    }
}

inline void add_conjugations(Family family, Bounds bounds, BudgetCounter& budget, std::set<PeriodicColoring>& out) {
    const auto profiles = all_profiles(family.n, bounds.max_colors);
    for (const auto& a : profiles)
        for (const auto& b : profiles)
            for (const auto& c : profiles)
                for (const auto& d : profiles) {
                    budget.tick();
                    Semicoloring even(Parity::Even, family.n, {BlockProfile(a), BlockProfile(b)});
                    Semicoloring odd(Parity::Odd, family.n, {BlockProfile(c), BlockProfile(d)});
                    bool shared = false;
                    for (int j = 0; j < bounds.max_colors; ++j)
                        if ((a[j] || b[j]) && (c[j] || d[j])) shared = true;
                    auto coloring = interleave(even, odd);
                    if (shared && !matched_check(coloring)) continue;
                    if (!is_perfect(coloring))
                        throw InternalError("conjugation of disjoint or matched semicolorings is not perfect: " +
                                            coloring.str());
                    if (within(coloring, bounds)) out.insert(canonicalize(coloring));
                }
}

inline void add_three_periodic(Family family, Bounds bounds, BudgetCounter& budget, std::set<PeriodicColoring>& out) {
    const auto profiles = all_profiles(family.n, bounds.max_colors);
    for (const auto& a : profiles)
        for (const auto& b : profiles)
            for (const auto& c : profiles) {
                budget.tick();
                auto r = three_periodic_complete(BlockProfile(a), BlockProfile(b), BlockProfile(c), family.n);
                if (r && within(*r, bounds)) out.insert(canonicalize(*r));
            }
}

}  // namespace detail

/// The colorings described by the classification, within bounds.
inline Catalog theorem_enumerate(Family family, Bounds bounds, SearchOptions options = {}) {
    detail::check_bounds(bounds);
    detail::BudgetCounter budget(options.budget);
    std::set<PeriodicColoring> found;
    detail::add_disjunctive(family, bounds, budget, found);
    if (family.kind == BlockKind::Empty)
        detail::add_conjugations(family, bounds, budget, found);
    else
        detail::add_three_periodic(family, bounds, budget, found);
    return Catalog(family, bounds, found);
}

}  // namespace percol
