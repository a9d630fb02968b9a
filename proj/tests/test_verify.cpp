#include <gtest/gtest.h>

#include "fockcb/verify.hpp"
#include "oracles.hpp"

using namespace fockcb;
using oracle::P;

namespace {
const BlockRange small{{2, 3, 4}, 2, 3};

void expect_clean(const SuiteReport& r) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.cases, 0u) << r.name;
}
}  // namespace

TEST(Verify, BlocksInRangeOrdering) {
    const auto blocks = blocks_in_range({{3, 2}, 1, 2});
    ASSERT_FALSE(blocks.empty());
    for (std::size_t i = 1; i < blocks.size(); ++i) EXPECT_LE(blocks[i - 1].size(), blocks[i].size());
    EXPECT_EQ(blocks.front(), (BlockId{2, Partition{}, 0}));
    for (const auto& b : blocks) EXPECT_EQ(e_weight(b.core, b.e), 0);
    EXPECT_EQ(blocks_in_range({{3}, 2, 0, 1}).size(), 2u);
}

TEST(Verify, ReportMergeCapsFailures) {
    SuiteReport a;
    SuiteReport b;
    b.cases = 40;
    for (int i = 0; i < 30; ++i) b.fail("case " + std::to_string(i));
    a.cases = 2;
    a.merge(std::move(b));
    EXPECT_EQ(a.cases, 42u);
    EXPECT_EQ(a.failure_count, 30u);
    EXPECT_EQ(a.failures.size(), SuiteReport::max_listed_failures);
    EXPECT_EQ(a.failures.front(), "case 0");
    EXPECT_FALSE(a.passed());
}

TEST(Verify, RunnerRemoval) { expect_clean(verify_runner_removal({{3, 4}, 2, 3})); }
TEST(Verify, Mullineux) { expect_clean(verify_mullineux({2, 3, 4}, 12)); }
TEST(Verify, MullineuxOracle) { expect_clean(verify_mullineux_oracle(small)); }
TEST(Verify, Conjugation) { expect_clean(verify_conjugation(small)); }
TEST(Verify, DegreeProfile) { expect_clean(verify_degree_profile(small)); }
TEST(Verify, DominanceSupport) { expect_clean(verify_dominance_support(small)); }
TEST(Verify, SandwichSupport) { expect_clean(verify_sandwich_support(small)); }
TEST(Verify, BarInvolution) { expect_clean(verify_bar_involution(small)); }
TEST(Verify, Scopes) { expect_clean(verify_scopes(small)); }
TEST(Verify, Finite) { expect_clean(verify_finite({{2, 3}, 2, 3})); }

TEST(Verify, ThreadCountDoesNotChangeReport) {
    const SuiteReport one = verify_conjugation(small, 1);
    const SuiteReport many = verify_conjugation(small, 4);
    EXPECT_EQ(one.cases, many.cases);
    EXPECT_EQ(one.failure_count, many.failure_count);
}

TEST(Verify, DSetSmallWeights) {
    const LaurentPoly q = LaurentPoly::q(1);
    for (int e = 2; e <= 5; ++e) {
        EXPECT_EQ(d_set(e, 0, 6).values, (PolySet{LaurentPoly(), LaurentPoly(1)}));
        EXPECT_EQ(d_set(e, 1, 6).values, (PolySet{LaurentPoly(), LaurentPoly(1), q}));
    }
    const DSetResult two = d_set(3, 2, 6);
    EXPECT_FALSE(two.representatives.empty());
    for (const auto& v : two.values) {
        ASSERT_FALSE(v.is_zero() && v != LaurentPoly());
        if (!v.is_zero()) {
            EXPECT_GE(v.min_degree(), 0);
            EXPECT_LE(v.max_degree(), 2);
        }
    }
}
