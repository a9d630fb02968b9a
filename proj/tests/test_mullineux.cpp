#include <gtest/gtest.h>

#include "fockcb/mullineux.hpp"
#include "oracles.hpp"

using namespace fockcb;
using oracle::P;

TEST(Mullineux, RimStripGolden) {
    const RimStrip s = strip_rim(P("12,11,11,7,6,5,3,3,2"), 3, 15);
    EXPECT_EQ(s.pairs, (std::vector<std::pair<int, int>>{{26, 20}, {18, 15}, {14, 6}}));
    EXPECT_EQ(s.rim_length, 17);
    EXPECT_EQ(s.result, P("10,10,8,5,5,2,2,1"));
    const RimStrip a = strip_rim(P("3"), 3, 6);
    EXPECT_EQ(a.pairs, (std::vector<std::pair<int, int>>{{8, 5}}));
    EXPECT_EQ(a.rim_length, 3);
    EXPECT_TRUE(a.result.empty());
    const RimStrip b = strip_rim(P("6,3,1"), 3, 6);
    EXPECT_EQ(b.pairs, (std::vector<std::pair<int, int>>{{11, 8}, {7, 3}}));
    EXPECT_EQ(b.rim_length, 7);
    EXPECT_EQ(b.result, P("3"));
    EXPECT_THROW(strip_rim(P("1,1,1"), 3), precondition_error);
}

TEST(Mullineux, ConjugateRimStripGolden) {
    const RimStrip a = strip_rim_conj(P("2,1"), 3, 6);
    EXPECT_EQ(a.pairs, (std::vector<std::pair<int, int>>{{7, 4}}));
    EXPECT_EQ(a.rim_length, 3);
    EXPECT_TRUE(a.result.empty());
    const RimStrip b = strip_rim_conj(P("5,3,2"), 3, 6);
    EXPECT_EQ(b.pairs, (std::vector<std::pair<int, int>>{{10, 3}}));
    EXPECT_EQ(b.rim_length, 7);
    EXPECT_EQ(b.result, P("2,1"));
}

TEST(Mullineux, ConjugateRimOfConjugate) {
    for (int n = 1; n <= 16; ++n)
        for_each_partition(n, [](const Partition& nu) {
            for (int e = 2; e <= 4; ++e) {
                if (!is_e_restricted(nu, e)) continue;
                const RimStrip a = strip_rim_conj(nu, e);
                const RimStrip b = strip_rim(conjugate(nu), e);
                ASSERT_EQ(a.rim_length, b.rim_length);
                ASSERT_EQ(a.result, conjugate(b.result));
            }
        });
}

TEST(Mullineux, MapGolden) {
    EXPECT_EQ(mullineux(P("3"), 3), P("2,1"));
    EXPECT_EQ(mullineux(P("6,3,1"), 3), P("3,3,2,1,1"));
    EXPECT_EQ(mullineux(P("4"), 3), P("2,2"));
    EXPECT_EQ(mullineux_conjugate(P("3"), 3), P("2,1"));
    EXPECT_EQ(mullineux_conjugate(P("6,3,1"), 3), P("5,3,2"));
    EXPECT_EQ(mullineux_conjugate(Partition{}, 4), Partition{});
    EXPECT_THROW(mullineux(P("2,2"), 2), precondition_error);
}

TEST(Mullineux, Characterization) {
    EXPECT_TRUE(check_mull_characterization(P("6,3,1"), P("5,3,2"), 3));
    EXPECT_FALSE(check_mull_characterization(P("6,3,1"), P("5,4,1"), 3));
    EXPECT_TRUE(check_mull_characterization(P("3"), P("2,1"), 3));
}

TEST(Mullineux, DegreeOracle) {
    EXPECT_EQ(mullineux_by_degree(P("4"), 3), P("2,2"));
    EXPECT_EQ(mullineux_by_degree(P("2,2"), 3), P("1,1,1,1"));
    EXPECT_EQ(mullineux_by_degree(P("2,1"), 3), P("1,1,1"));
}

TEST(Mullineux, AgreesWithSymbolOracle) {
    for (int n = 0; n <= 16; ++n)
        for_each_partition(n, [](const Partition& mu) {
            for (int e = 2; e <= 5; ++e) {
                if (!is_e_regular(mu, e)) continue;
                const Partition m = mullineux(mu, e);
                ASSERT_EQ(m.size(), mu.size());
                ASSERT_TRUE(is_e_regular(m, e));
                ASSERT_EQ(oracle::mullineux_symbol(m, e),
                          oracle::mullineux_symbol_image(oracle::mullineux_symbol(mu, e), e))
                    << mu << " e=" << e;
                ASSERT_EQ(mullineux(m, e), mu);
            }
        });
}

TEST(Mullineux, GoodNodes) {
    // (2,1) at e=3 has removable nodes (1,2) residue 1 and (2,1) residue 2
    EXPECT_TRUE(good_node(P("2,1"), 3, 1).has_value());
    EXPECT_FALSE(good_node(P("2,1"), 3, 0).has_value());
    const std::vector<int> path = good_node_path(P("2,1"), 3);
    EXPECT_EQ(path.size(), 3u);
}
