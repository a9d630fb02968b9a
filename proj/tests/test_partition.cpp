#include <gtest/gtest.h>

#include "fockcb/partition.hpp"
#include "oracles.hpp"

using namespace fockcb;
using oracle::P;

TEST(Partition, ParseAndPrint) {
    EXPECT_EQ(P("4,2,2").parts(), (std::vector<int>{4, 2, 2}));
    EXPECT_TRUE(P("0").empty());
    EXPECT_EQ(P(" 3 , 1 ").to_string(), "3,1");
    EXPECT_EQ(Partition{}.to_string(), "0");
    EXPECT_EQ(Partition(std::vector<int>{2, 1, 0, 0}), P("2,1"));
}

TEST(Partition, ParseRejectsMalformed) {
    for (const char* bad : {"", "1,2", "3,-1", "a", "3,,1", "2,0,1", "0,0", "1.5"})
        EXPECT_THROW(Partition::parse(bad), precondition_error) << bad;
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(conjugate(P("9,7,4,4,2,1,1,1")), P("8,5,4,4,2,2,2,1,1"));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    EXPECT_EQ(conjugate(P("4,4,3,1,1,1")), P("6,3,3,2"));
}

TEST(Partition, ConjugateMatchesCellTranspose) {
    for (int n = 0; n <= 12; ++n)
        for_each_partition(n, [](const Partition& la) {
            EXPECT_EQ(conjugate(la), oracle::transpose(la));
            EXPECT_EQ(conjugate(conjugate(la)), la);
        });
}

TEST(Partition, RegularAndRestricted) {
    EXPECT_TRUE(is_e_regular(P("12,11,11,7,6,5,3,3,2"), 3));
    EXPECT_FALSE(is_e_regular(P("1,1,1"), 3));
    EXPECT_TRUE(is_e_regular(P("4"), 3));
    EXPECT_TRUE(is_e_restricted(P("5,3,2"), 3));
    EXPECT_FALSE(is_e_restricted(P("4"), 3));
    EXPECT_TRUE(is_e_restricted(Partition{}, 2));
}

TEST(Partition, RegularRestrictedDuality) {
    for (int n = 0; n <= 20; ++n)
        for_each_partition(n, [](const Partition& la) {
            for (int e = 2; e <= 5; ++e) ASSERT_EQ(is_e_regular(la, e), is_e_restricted(conjugate(la), e));
        });
}

TEST(Partition, NodesByResidue) {
    auto a = nodes_by_residue(P("1"), 2, 1, NodeKind::addable);
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0].row, 1);
    EXPECT_EQ(a[0].col, 2);
    EXPECT_EQ(a[1].row, 2);
    EXPECT_EQ(a[1].col, 1);
    auto b = nodes_by_residue(Partition{}, 3, 0, NodeKind::addable);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].row, 1);
    EXPECT_EQ(b[0].col, 1);
    EXPECT_TRUE(nodes_by_residue(Partition{}, 3, 1, NodeKind::removable).empty());
    EXPECT_THROW(nodes_by_residue(P("1"), 3, 3, NodeKind::addable), precondition_error);
    EXPECT_THROW(nodes_by_residue(P("1"), 1, 0, NodeKind::addable), precondition_error);
}

TEST(Partition, AddableIsRemovablePlusOne) {
    for (int n = 0; n <= 12; ++n)
        for_each_partition(n, [](const Partition& la) {
            for (int e = 2; e <= 5; ++e)
                ASSERT_EQ(all_nodes(la, e, NodeKind::addable).size(), all_nodes(la, e, NodeKind::removable).size() + 1);
        });
}

TEST(Partition, AddAndRemoveNodes) {
    EXPECT_EQ(add_nodes(Partition{}, {{1, 1, 0}}), P("1"));
    EXPECT_EQ(add_nodes(P("1"), {{1, 2, 1}, {2, 1, 1}}), P("2,1"));
    EXPECT_EQ(add_nodes(P("2,1"), {}), P("2,1"));
    EXPECT_EQ(remove_nodes(P("2,1"), {{1, 2, 1}, {2, 1, 1}}), P("1"));
    EXPECT_THROW(add_nodes(P("1"), {{2, 2, 0}}), precondition_error);
}

TEST(Partition, Enumeration) {
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), counts[n]);
    EXPECT_EQ(partitions_of(20).size(), 627u);
}
