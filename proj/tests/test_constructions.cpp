#include <gtest/gtest.h>

#include <iostream>
#include <random>

#include "percol/percol.hpp"

using namespace percol;

namespace {

BlockProfile bp(std::vector<int> v) { return BlockProfile(std::move(v)); }

PeriodicColoring path(std::vector<int> colors) { return PeriodicColoring::block_monochrome(Family::path(), colors); }

Semicoloring semi(Parity p, int n, std::vector<std::vector<int>> rows) {
    std::vector<BlockProfile> period;
    for (auto& r : rows) period.emplace_back(r);
    return Semicoloring(p, n, period);
}

PeriodicColoring coloring(Family f, std::vector<std::vector<int>> rows) {
    std::vector<BlockProfile> period;
    for (auto& r : rows) period.emplace_back(r);
    return PeriodicColoring(f, period);
}

bool same_up_to_rotation(const PeriodicColoring& a, const PeriodicColoring& b) {
    auto ra = primitive_root(a), rb = primitive_root(b);
    if (ra.length() != rb.length() || ra.colors() != rb.colors()) return false;
    for (int s = 0; s < ra.length(); ++s)
        if (rotated(ra, s) == rb) return true;
    return false;
}

}  // namespace

TEST(Series, Cyclic) {
    EXPECT_EQ(block_colors(series_cyclic(1)), (std::vector<int>{0}));
    EXPECT_EQ(block_colors(series_cyclic(3)), (std::vector<int>{0, 1, 2}));
    auto m = infer_matrix(series_cyclic(2));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->rows(), (std::vector<std::vector<int>>{{0, 2}, {2, 0}}));
    EXPECT_THROW(series_cyclic(0), DomainError);
}

TEST(Series, Mirror) {
    EXPECT_EQ(block_colors(series_mirror(3, SeriesKind::Mirror22)), (std::vector<int>{2, 1, 0, 0, 1, 2}));
    EXPECT_EQ(block_colors(series_mirror(2, SeriesKind::Mirror12)), (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(block_colors(series_mirror(4, SeriesKind::Mirror11)), (std::vector<int>{3, 2, 1, 0, 1, 2}));
    EXPECT_EQ(block_colors(series_mirror(4, SeriesKind::Mirror12)), (std::vector<int>{3, 2, 1, 0, 1, 2, 3}));
    EXPECT_EQ(canonicalize(series_mirror(2, SeriesKind::Mirror11)), canonicalize(series_cyclic(2)));
    EXPECT_THROW(series_mirror(1, SeriesKind::Mirror22), DomainError);
    for (auto s : kAllSeries)
        for (int k = series_min_colors(s); k <= 7; ++k) {
            auto c = series_member(s, k);
            EXPECT_EQ(c.length(), series_period_length(s, k));
            EXPECT_EQ(c.colors(), k);
            EXPECT_TRUE(is_perfect(c)) << to_string(s) << ' ' << k;
        }
}

TEST(Lift, Examples) {
    auto s2 = lift_block_monochrome(series_cyclic(2), Family::empty(2));
    EXPECT_EQ(s2, coloring(Family::empty(2), {{2, 0}, {0, 2}}));
    EXPECT_EQ(infer_matrix(s2)->rows(), (std::vector<std::vector<int>>{{0, 4}, {4, 0}}));

    auto s1 = lift_block_monochrome(series_cyclic(1), Family::complete(2));
    EXPECT_EQ(infer_matrix(s1)->rows(), (std::vector<std::vector<int>>{{5}}));

    auto s22 = series_mirror(3, SeriesKind::Mirror22);
    auto lifted = infer_matrix(lift_block_monochrome(s22, Family::empty(2)));
    auto base = infer_matrix(s22);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ((*lifted)(i, j), 2 * (*base)(i, j));

    EXPECT_THROW(lift_block_monochrome(s2, Family::empty(2)), PreconditionViolated);
}

TEST(Disjunctive, Examples) {
    auto a = disjunctive_multipath(series_cyclic(2), {bp({2, 0, 0}), bp({0, 1, 1})}, Family::empty(2));
    EXPECT_EQ(a, coloring(Family::empty(2), {{2, 0, 0}, {0, 1, 1}}));

    auto b = disjunctive_multipath(series_cyclic(1), {bp({1, 2})}, Family::empty(3));
    EXPECT_EQ(b, coloring(Family::empty(3), {{1, 2}}));

    auto c = disjunctive_multipath(series_mirror(2, SeriesKind::Mirror12), {bp({1, 1, 0}), bp({0, 0, 2})},
                                   Family::complete(2));
    EXPECT_TRUE(is_perfect(c));

    EXPECT_THROW(disjunctive_multipath(series_cyclic(2), {bp({2, 0}), bp({1, 1})}, Family::empty(2)),
                 OverlappingSupports);
    EXPECT_THROW(disjunctive_multipath(path({0, 1, 1, 1}), {bp({2, 0}), bp({0, 2})}, Family::empty(2)), PsiNotPerfect);
}

TEST(Disjunctive, RandomInstancesArePerfect) {
    const unsigned seed = 4242;
    std::cout << "seed " << seed << '\n';
    std::mt19937 rng(seed);
    for (int t = 0; t < 300; ++t) {
        auto s = kAllSeries[rng() % 4];
        const int k = series_min_colors(s) + static_cast<int>(rng() % 3);
        const Family f(rng() % 2 ? BlockKind::Complete : BlockKind::Empty, 1 + static_cast<int>(rng() % 3));
        int next = 0;
        std::vector<std::vector<int>> raw;
        for (int p = 0; p < k; ++p) {
            std::vector<int> counts;
            int left = f.n;
            while (left > 0) {
                int take = 1 + static_cast<int>(rng() % left);
                counts.push_back(take);
                left -= take;
            }
            std::vector<int> row(next, 0);
            row.insert(row.end(), counts.begin(), counts.end());
            next += static_cast<int>(counts.size());
            raw.push_back(row);
        }
        std::vector<BlockProfile> profiles;
        for (auto& r : raw) profiles.push_back(bp(r).resized(next));
        auto out = disjunctive_multipath(series_member(s, k), profiles, f);
        ASSERT_TRUE(is_perfect(out)) << out.str();
    }
}

TEST(Conjugation, Examples) {
    auto disjoint = conjugate_semicolorings(semi(Parity::Even, 2, {{2, 0, 0, 0}, {0, 2, 0, 0}}),
                                            semi(Parity::Odd, 2, {{0, 0, 1, 1}}));
    ASSERT_TRUE(disjoint);
    EXPECT_EQ(disjoint->length(), 4);

    auto matched = conjugate_semicolorings(semi(Parity::Even, 2, {{2, 0}, {0, 2}}), semi(Parity::Odd, 2, {{1, 1}}));
    ASSERT_TRUE(matched);
    EXPECT_EQ(*matched, coloring(Family::empty(2), {{2, 0}, {1, 1}, {0, 2}, {1, 1}}));
    EXPECT_TRUE(matched_check(*matched));

    auto bad = conjugate_semicolorings(semi(Parity::Even, 2, {{2, 0}}), semi(Parity::Odd, 2, {{0, 2}, {2, 0}}));
    ASSERT_FALSE(bad);

    EXPECT_THROW(conjugate_semicolorings(semi(Parity::Odd, 2, {{2}}), semi(Parity::Odd, 2, {{2}})),
                 PreconditionViolated);
    EXPECT_THROW(conjugate_semicolorings(semi(Parity::Even, 2, {{2}}), semi(Parity::Odd, 3, {{3}})),
                 PreconditionViolated);
}

TEST(Conjugation, DisjointTwoPeriodicAlwaysPerfect) {
    for (int n = 1; n <= 3; ++n) {
        auto all = detail::all_profiles(n, 2);
        for (const auto& e0 : all)
            for (const auto& e1 : all)
                for (const auto& o0 : all)
                    for (const auto& o1 : all) {
                        // Even part over colors {0,1}, odd part over {2,3}.
                        auto shift = [](const std::vector<int>& v) { return std::vector<int>{0, 0, v[0], v[1]}; };
                        auto widen = [](const std::vector<int>& v) { return std::vector<int>{v[0], v[1], 0, 0}; };
                        auto r = conjugate_semicolorings(semi(Parity::Even, n, {widen(e0), widen(e1)}),
                                                         semi(Parity::Odd, n, {shift(o0), shift(o1)}));
                        ASSERT_TRUE(r) << n;
                    }
    }
}

TEST(Conjugation, SplitRoundTrip) {
    auto c = coloring(Family::empty(2), {{2, 0}, {1, 1}, {0, 2}, {1, 1}});
    auto [even, odd] = split_semicolorings(c);
    EXPECT_EQ(even.period.size(), 2u);
    EXPECT_EQ(odd.period.size(), 1u);
    EXPECT_EQ(interleave(even, odd), c);
}

TEST(Matched, Examples) {
    EXPECT_TRUE(matched_check(coloring(Family::empty(2), {{2, 0}, {1, 1}, {0, 2}, {1, 1}})));
    EXPECT_TRUE(matched_check(coloring(Family::empty(2), {{2, 0}, {2, 0}, {0, 2}, {0, 2}})));
    EXPECT_FALSE(matched_check(coloring(Family::empty(2), {{2, 0}, {2, 0}, {1, 1}, {0, 2}})));
    EXPECT_TRUE(matched_check(coloring(Family::empty(2), {{1, 1}})));
    // S(2) repeated to A B A B: color 0 gives 0 + 0 against 1 + 1.
    EXPECT_FALSE(matched_check(coloring(Family::empty(1), {{1, 0}, {0, 1}})));
    EXPECT_THROW(matched_check(coloring(Family::empty(1), {{1, 0}, {0, 1}, {0, 1}})), DomainError);
    EXPECT_THROW(matched_check(coloring(Family::complete(1), {{1}})), PreconditionViolated);
}

TEST(Matched, ImpliesPerfectExhaustively) {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto all = detail::all_profiles(n, k);
            for (const auto& a : all)
                for (const auto& b : all)
                    for (const auto& c : all)
                        for (const auto& d : all) {
                            std::vector<BlockProfile> period{bp(a), bp(b), bp(c), bp(d)};
                            auto col = PeriodicColoring::normalized(Family::empty(n), period);
                            if (4 % primitive_period(col) != 0) continue;
                            if (matched_check(col)) {
                                ASSERT_TRUE(is_perfect(col)) << col.str();
                            }
                        }
        }
}

TEST(ThreePeriodic, Examples) {
    auto four = three_periodic_complete(bp({1, 1, 0, 0}), bp({0, 0, 2, 0}), bp({0, 0, 0, 2}), 2);
    EXPECT_TRUE(four);
    auto mono = three_periodic_complete(bp({2}), bp({2}), bp({2}), 2);
    ASSERT_TRUE(mono);
    EXPECT_EQ(canonicalize(*mono), lift_block_monochrome(series_cyclic(1), Family::complete(2)));
    auto two = three_periodic_complete(bp({1, 1}), bp({2, 0}), bp({0, 2}), 2);
    ASSERT_TRUE(two);
    EXPECT_EQ(infer_matrix(*two)->rows(), (std::vector<std::vector<int>>{{2, 3}, {3, 2}}));
}

TEST(ThreePeriodic, EveryThreeBlockPeriodIsPerfect) {
    // A vertex of color c sees N(i-1) + N(i) + N(i+1) - e_c, which for a
    // 3-block period is the whole period's count vector minus e_c.
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto all = detail::all_profiles(n, k);
            for (const auto& a : all)
                for (const auto& b : all)
                    for (const auto& c : all) ASSERT_TRUE(three_periodic_complete(bp(a), bp(b), bp(c), n));
        }
}

TEST(Propagate, Examples) {
    auto alt = propagate(ParameterMatrix({{0, 2}, {2, 0}}), bp({1, 0}), bp({0, 1}), Family::path());
    ASSERT_TRUE(std::holds_alternative<PeriodicColoring>(alt));
    EXPECT_EQ(std::get<PeriodicColoring>(alt), series_cyclic(2));

    auto s22 = series_mirror(3, SeriesKind::Mirror22);
    auto r = propagate(*infer_matrix(s22), bp({1, 0, 0}), bp({1, 0, 0}), Family::path());
    ASSERT_TRUE(std::holds_alternative<PeriodicColoring>(r));
    EXPECT_EQ(std::get<PeriodicColoring>(r).length(), 6);
    EXPECT_TRUE(same_up_to_rotation(std::get<PeriodicColoring>(r), s22));

    EXPECT_THROW(propagate(ParameterMatrix(std::vector<std::vector<int>>{{2}}), bp({1, 1}), bp({2}), Family::empty(2)), PreconditionViolated);
}

TEST(Propagate, DecreasingCountContradiction) {
    // x = 1 occurrence of color 1 in block 0, z = 0 in block 3.
    ParameterMatrix m({{2, 1, 2}, {3, 0, 2}, {4, 0, 1}});
    auto r = propagate(m, bp({1, 1, 0}), bp({2, 0, 0}), Family::complete(2));
    ASSERT_TRUE(std::holds_alternative<Contradiction>(r));
    const auto& c = std::get<Contradiction>(r);
    EXPECT_EQ(c.block, 6);
    EXPECT_EQ(c.trace[0][1], 1);
    EXPECT_EQ(c.trace[3][1], 0);
    EXPECT_EQ(c.trace[6][1], -1);
    EXPECT_LE(c.block - 3, 3 * (0 + 1));

    // x = 2, z = 1: the count drops 2, 1, 0, -1 every three blocks.
    ParameterMatrix m2({{1, 2, 2}, {2, 1, 2}, {3, 1, 1}});
    auto r2 = propagate(m2, bp({0, 2, 0}), bp({2, 0, 0}), Family::complete(2));
    ASSERT_TRUE(std::holds_alternative<Contradiction>(r2));
    const auto& c2 = std::get<Contradiction>(r2);
    EXPECT_EQ(c2.block, 9);
    for (int p = 0; p <= 3; ++p) EXPECT_EQ(c2.trace[3 * p][1], 2 - p);
    EXPECT_LE(c2.block - 3, 3 * (1 + 1));
}

TEST(Propagate, RestoresCatalogEntries) {
    for (auto f : {Family::empty(1), Family::empty(2), Family::complete(2)}) {
        auto cat = theorem_enumerate(f, {3, 6});
        for (const auto& e : cat.entries())
            for (int i = 0; i < e.coloring.length(); ++i) {
                auto r = propagate(e.matrix, e.coloring.block(i), e.coloring.block(i + 1), f);
                ASSERT_TRUE(std::holds_alternative<PeriodicColoring>(r)) << e.coloring.str();
                ASSERT_TRUE(same_up_to_rotation(std::get<PeriodicColoring>(r), e.coloring));
            }
    }
}
