#include <gtest/gtest.h>

#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "percol/percol.hpp"

using namespace percol;

namespace {

BlockProfile bp(std::vector<int> v) { return BlockProfile(std::move(v)); }

PeriodicColoring path(std::vector<int> colors) { return PeriodicColoring::block_monochrome(Family::path(), colors); }

// Independent check: walk every vertex of every block and count neighbor
// colors by explicit enumeration of the adjacency rule.
std::optional<std::vector<std::vector<int>>> naive_matrix(const PeriodicColoring& c) {
    const int k = c.colors(), p = c.length();
    auto labels = vertex_labels(c);
    std::vector<std::optional<std::vector<int>>> rows(k);
    for (int i = 0; i < p; ++i)
        for (std::size_t v = 0; v < labels[i].size(); ++v) {
            std::vector<int> cnt(k, 0);
            for (int d : {-1, 1})
                for (int w : labels[((i + d) % p + p) % p]) ++cnt[w];
            if (c.family().kind == BlockKind::Complete)
                for (std::size_t u = 0; u < labels[i].size(); ++u)
                    if (u != v) ++cnt[labels[i][u]];
            auto& r = rows[labels[i][v]];
            if (r && *r != cnt) return std::nullopt;
            r = cnt;
        }
    std::vector<std::vector<int>> out;
    for (auto& r : rows) out.push_back(*r);
    return out;
}

PeriodicColoring random_coloring(std::mt19937& rng, Family f, int k, int p) {
    std::uniform_int_distribution<int> col(0, k - 1);
    std::vector<BlockProfile> period;
    for (int i = 0; i < p; ++i) {
        std::vector<int> counts(k, 0);
        for (int v = 0; v < f.n; ++v) ++counts[col(rng)];
        period.emplace_back(counts);
    }
    return PeriodicColoring::normalized(f, period);
}

}  // namespace

TEST(Family, Degree) {
    EXPECT_EQ(Family::empty(3).degree(), 6);
    EXPECT_EQ(Family::complete(3).degree(), 8);
    EXPECT_THROW(Family::empty(0), DomainError);
}

TEST(PeriodicColoring, RejectsBadInput) {
    EXPECT_THROW(PeriodicColoring(Family::empty(2), {bp({1, 0})}), InvalidColoring);
    EXPECT_THROW(PeriodicColoring(Family::empty(1), {bp({1, 0})}), InvalidColoring);
    EXPECT_THROW(PeriodicColoring(Family::empty(1), {}), InvalidColoring);
    auto c = PeriodicColoring::normalized(Family::empty(1), {bp({0, 0, 1}), bp({1, 0, 0})});
    EXPECT_EQ(c.colors(), 2);
}

TEST(NeighborProfile, Examples) {
    EXPECT_EQ(neighbor_profile(path({0, 1}), 0, 0), (std::vector<int>{0, 2}));
    PeriodicColoring mono(Family::empty(2), {bp({2})});
    EXPECT_EQ(neighbor_profile(mono, 0, 0), (std::vector<int>{4}));
    PeriodicColoring cc(Family::complete(2), {bp({2, 0}), bp({0, 2})});
    EXPECT_EQ(neighbor_profile(cc, 0, 0), (std::vector<int>{1, 4}));
    EXPECT_TRUE(verify_periodic(cc, ParameterMatrix({{1, 4}, {4, 1}})));
    EXPECT_THROW(neighbor_profile(cc, 0, 1), ColorAbsent);
}

TEST(InferMatrix, S22Of3) {
    auto c = path({2, 1, 0, 0, 1, 2});
    auto m = infer_matrix(c);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->rows(), (std::vector<std::vector<int>>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    EXPECT_EQ(m->rows(), *naive_matrix(c));
    EXPECT_TRUE(verify_periodic(c, *m));
    EXPECT_FALSE(verify_periodic(c, ParameterMatrix({{0, 2, 0}, {1, 0, 1}, {0, 1, 1}})));
    EXPECT_FALSE(verify_periodic(c, ParameterMatrix(std::vector<std::vector<int>>{{2}})));
}

TEST(InferMatrix, MonochromeAndFailure) {
    auto m = infer_matrix(PeriodicColoring(Family::empty(2), {bp({2})}));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->rows(), (std::vector<std::vector<int>>{{4}}));

    // [0 0 1] is a renamed S12(2) and is perfect; [0 1 1 1] is not.
    auto s12 = infer_matrix(path({0, 0, 1}));
    ASSERT_TRUE(s12);
    EXPECT_EQ(s12->rows(), *naive_matrix(path({0, 0, 1})));

    auto bad = path({0, 1, 1, 1});
    auto r = infer_matrix(bad);
    ASSERT_FALSE(r);
    EXPECT_FALSE(naive_matrix(bad).has_value());
    EXPECT_EQ(r.error().color, 1);
    EXPECT_NE(r.error().expected, r.error().found);
}

TEST(Canonicalize, Examples) {
    EXPECT_EQ(canonicalize(path({1, 0})), path({0, 1}));
    EXPECT_EQ(canonicalize(path({0, 1, 0, 1})), path({0, 1}));
    EXPECT_EQ(canonicalize(path({2, 1, 0, 0, 1, 2})), canonicalize(path({0, 1, 2, 2, 1, 0})));
    EXPECT_TRUE(equivalent_up_to_symmetry(path({0, 1, 1}), path({1, 0, 0})));
    EXPECT_FALSE(equivalent_up_to_symmetry(path({0, 1, 1}), path({0, 1})));
}

TEST(PrimitiveRoot, Basics) {
    EXPECT_EQ(primitive_period(path({0, 1, 0, 1, 0, 1})), 2);
    EXPECT_EQ(primitive_period(path({0, 1, 1})), 3);
    EXPECT_EQ(primitive_root(repeated(path({0, 1, 1}), 3)), path({0, 1, 1}));
}

TEST(VertexLabels, NondecreasingWithinBlocks) {
    PeriodicColoring c(Family::empty(3), {bp({1, 2}), bp({2, 1})});
    auto l = vertex_labels(c);
    EXPECT_EQ(l[0], (std::vector<int>{0, 1, 1}));
    EXPECT_EQ(l[1], (std::vector<int>{0, 0, 1}));
}

TEST(Properties, RandomColorings) {
    const unsigned seed = 12345;
    std::cout << "seed " << seed << '\n';
    std::mt19937 rng(seed);
    int perfect = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        Family f(trial % 2 ? BlockKind::Complete : BlockKind::Empty, 1 + trial % 3);
        auto c = random_coloring(rng, f, 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 6));
        auto m = infer_matrix(c);
        auto naive = naive_matrix(c);
        ASSERT_EQ(m.has_value(), naive.has_value()) << c.str();
        // Doubling the period never changes the answer.
        auto m2 = infer_matrix(repeated(c, 2));
        ASSERT_EQ(m.has_value(), m2.has_value());
        auto canon = canonicalize(c);
        ASSERT_EQ(canonicalize(canon), canon);
        ASSERT_EQ(canonicalize(reflected(rotated(c, 1))), canon);
        ASSERT_EQ(is_perfect(canon), m.has_value());
        if (!m) continue;
        ++perfect;
        ASSERT_EQ(m->rows(), *naive);
        ASSERT_EQ(*m2, *m);
        ASSERT_TRUE(m->zero_symmetric());
        for (int i = 0; i < m->size(); ++i) ASSERT_EQ(m->row_sum(i), f.degree());
        // The canonical matrix is the original one up to a color renaming.
        auto mc = *infer_matrix(canon);
        std::vector<int> perm(m->size());
        std::iota(perm.begin(), perm.end(), 0);
        bool found = false;
        do found = m->renamed(perm) == mc; while (!found && std::next_permutation(perm.begin(), perm.end()));
        ASSERT_TRUE(found) << c.str();
    }
    EXPECT_GT(perfect, 100);
}

TEST(Properties, PathAgreesWithDirectCheck) {
    // Every path coloring of period <= 8 with <= 3 colors: perfect iff each
    // color sees the same neighbor pair multiset everywhere.
    for (int p = 1; p <= 8; ++p) {
        std::vector<int> seq(p, 0);
        while (true) {
            std::set<int> used(seq.begin(), seq.end());
            if (static_cast<int>(used.size()) == *used.rbegin() + 1) {
                std::map<int, std::multiset<int>> seen;
                bool ok = true;
                for (int i = 0; i < p && ok; ++i) {
                    std::multiset<int> nb{seq[(i + p - 1) % p], seq[(i + 1) % p]};
                    auto [it, fresh] = seen.emplace(seq[i], nb);
                    ok = fresh || it->second == nb;
                }
                ASSERT_EQ(is_perfect(path(seq)), ok);
            }
            int i = 0;
            while (i < p && seq[i] == 2) seq[i++] = 0;
            if (i == p) break;
            ++seq[i];
        }
    }
}
