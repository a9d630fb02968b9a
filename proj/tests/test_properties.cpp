#include <gtest/gtest.h>

#include "fockcb/properties.hpp"

using namespace fockcb;

namespace {
void expect_clean(const SuiteReport& r) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.cases, 0u) << r.name;
}
}  // namespace

TEST(Properties, Partitions) { expect_clean(prop_partitions(12)); }
TEST(Properties, Abacus) { expect_clean(prop_abacus(10)); }
TEST(Properties, Dominance) { expect_clean(prop_dominance({{2, 3}, 2, 4})); }
TEST(Properties, RunnerStatistic) { expect_clean(prop_ux({{3, 4}, 2, 4})); }
TEST(Properties, Laurent) { expect_clean(prop_laurent(300, 7)); }
TEST(Properties, Straighten) { expect_clean(prop_straighten(300, 11)); }
TEST(Properties, FAction) { expect_clean(prop_runner_deletion(300, 13)); }
TEST(Properties, BarStandard) { expect_clean(prop_bar_standard(7, {2, 3})); }
TEST(Properties, BlockEnumeration) { expect_clean(prop_block_enumeration(16, {2, 3})); }
TEST(Properties, DSetInvariance) { expect_clean(prop_dset_invariance({{3}, 2, 4})); }

TEST(Properties, SeedsAreReproducible) {
    const SuiteReport a = prop_straighten(100, 5);
    const SuiteReport b = prop_straighten(100, 5);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.failures, b.failures);
}
