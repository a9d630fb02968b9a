#include <gtest/gtest.h>

#include <chrono>

#include "fockcb/wedge.hpp"
#include "oracles.hpp"

using namespace fockcb;
using oracle::P;

namespace {
LaurentPoly Q(int x) { return LaurentPoly::q(x); }
}  // namespace

TEST(Wedge, PairRelations) {
    EXPECT_EQ(straighten_pair(0, 2, 3), (WedgeVector{{{2, 0}, -Q(-1)}}));
    EXPECT_TRUE(straighten_pair(3, 3, 2).empty());
    EXPECT_EQ(straighten_pair(0, 3, 3), (WedgeVector{{{3, 0}, LaurentPoly(-1)}}));
    // i = 1, one series term at e = 2: u0^u3 = -q^-1 u3^u0 + (q - q^-1) u1^u2 -> straightened
    EXPECT_EQ(straighten({0, 3, 0}, 2), (WedgeVector{{{2, 1, 0}, Q(-2) - 1}}));
}

TEST(Wedge, GoldenThreeLetterWord) {
    const WedgeVector want{{{12, 2, 0}, -Q(-2)},
                           {{11, 3, 0}, Q(-3) - Q(-1)},
                           {{9, 5, 0}, Q(-2) - Q(-4)},
                           {{8, 6, 0}, Q(-5) - Q(-3)}};
    EXPECT_EQ(straighten({0, 2, 12}, 3), want);
    EXPECT_EQ(straighten_naive({0, 2, 12}, 3), want);
}

TEST(Wedge, FourLetterWordNormalized) {
    const WedgeVector v = straighten({0, 1, 2, 7}, 3);
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v.at({7, 2, 1, 0}), Q(-5));
    EXPECT_EQ(v.at({5, 4, 1, 0}), Q(-4) - Q(-6));
    EXPECT_EQ(exact_div(v.at({4, 3, 2, 1}), Q(-5)), Q(-2) - 1);
}

TEST(Wedge, RunnerDeletionExample) {
    // u0^u1^u8 at e = 2 and u0^u2^u12 at e = 3 have the same coefficients
    const WedgeVector a = straighten({0, 1, 8}, 2);
    const WedgeVector b = straighten({0, 2, 12}, 3);
    ASSERT_EQ(a.size(), b.size());
    for (const auto& [w, c] : b) {
        Word m;
        for (int x : w) m.push_back(phi_d(x, 3, 1));
        EXPECT_EQ(a.at(m), c);
    }
}

TEST(Wedge, OrderedWordsAreFixed) {
    EXPECT_EQ(straighten({9, 4, 1}, 3), (WedgeVector{{{9, 4, 1}, LaurentPoly(1)}}));
    EXPECT_TRUE(straighten({5, 5, 1}, 3).empty());
}

TEST(Wedge, EngineMatchesNaiveExhaustively) {
    for (int e = 2; e <= 4; ++e)
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; b <= 8; ++b)
                for (int c = 0; c <= 8; ++c) ASSERT_EQ(straighten({a, b, c}, e), straighten_naive({a, b, c}, e));
}

TEST(Wedge, BarStandardGolden) {
    const FockVector v = bar_standard(P("4"), 3, 4);
    const FockVector want{{P("4"), LaurentPoly(1)}, {P("2,2"), Q(1) - Q(-1)}, {P("1,1,1,1"), Q(-2) - 1}};
    EXPECT_EQ(v, want);
    EXPECT_EQ(bar_standard(Partition{}, 3, 2), (FockVector{{Partition{}, LaurentPoly(1)}}));
    EXPECT_EQ(bar_standard(P("2,2"), 3, 4), (FockVector{{P("2,2"), LaurentPoly(1)}, {P("1,1,1,1"), Q(1) - Q(-1)}}));
    EXPECT_THROW(bar_standard(P("4"), 3, 3), precondition_error);
}

TEST(Wedge, BarStandardIndependentOfR) {
    for (int n = 1; n <= 7; ++n)
        for_each_partition(n, [n](const Partition& mu) {
            for (int e = 2; e <= 4; ++e) ASSERT_EQ(bar_standard(mu, e, n), bar_standard(mu, e, n + 3)) << mu;
        });
}

TEST(Wedge, FAction) {
    EXPECT_EQ(apply_f({{Partition{}, LaurentPoly(1)}}, 3, 0), (FockVector{{P("1"), LaurentPoly(1)}}));
    EXPECT_EQ(apply_f({{P("1"), LaurentPoly(1)}}, 2, 1), (FockVector{{P("2"), LaurentPoly(1)}, {P("1,1"), Q(1)}}));
    EXPECT_TRUE(apply_f({{P("1"), LaurentPoly(1)}}, 2, 0).empty());
    EXPECT_EQ(apply_f_divided({{P("1"), LaurentPoly(1)}}, 2, 1, 2), (FockVector{{P("2,1"), LaurentPoly(1)}}));
    EXPECT_EQ(apply_f_divided({{P("3,1"), LaurentPoly(1)}}, 3, 2, 1), apply_f({{P("3,1"), LaurentPoly(1)}}, 3, 2));
}

TEST(Wedge, FActionMatchesOracle) {
    for (int n = 0; n <= 7; ++n)
        for_each_partition(n, [](const Partition& la) {
            for (int e = 2; e <= 4; ++e)
                for (int k = 0; k < e; ++k) {
                    const FockVector mine = apply_f({{la, LaurentPoly(1)}}, e, k);
                    const oracle::Vec ref = oracle::f({{la, LaurentPoly(1)}}, e, k);
                    ASSERT_EQ(mine, FockVector(ref.begin(), ref.end()));
                }
        });
}

TEST(Wedge, RejectsBadInput) {
    EXPECT_THROW(straighten({0, -1}, 3), precondition_error);
    EXPECT_THROW(straighten({0, 1}, 1), precondition_error);
}

TEST(Wedge, RepeatInCongruentRunVanishes) {
    int hits = 0;
    for (int e = 2; e <= 4; ++e)
        for (int a = 0; a < 10; ++a)
            for (int b = 0; b < 10; ++b)
                for (int c = 0; c < 10; ++c) {
                    if ((b - a) % e || (c - b) % e || (a != b && b != c && a != c)) continue;
                    ++hits;
                    EXPECT_TRUE(straighten({a, b, c}, e).empty()) << "e=" << e << " " << a << "," << b << "," << c;
                }
    EXPECT_GT(hits, 0);
    // the run is broken by u3, so the repeated u0 survives
    EXPECT_FALSE(straighten({0, 3, 0}, 2).empty());
}
