#include <gtest/gtest.h>

#include <algorithm>

#include "fockcb/io.hpp"
#include "oracles.hpp"

using namespace fockcb;
using oracle::P;
namespace io = fockcb::io;

TEST(Io, Partition) {
    EXPECT_EQ(io::to_json(P("4,2,2")).dump(), "[4,2,2]");
    EXPECT_EQ(io::to_json(Partition{}).dump(), "[]");
    EXPECT_EQ(io::partition_from_json(io::json::parse("[3,1]")), P("3,1"));
}

TEST(Io, Polynomial) {
    const LaurentPoly p = LaurentPoly::q(-2) - LaurentPoly(1);
    EXPECT_EQ(io::to_json(p).dump(), "[[-2,1],[0,-1]]");
    EXPECT_EQ(io::poly_from_json(io::to_json(p)), p);
    EXPECT_EQ(io::to_json(LaurentPoly()).dump(), "[]");
    const LaurentPoly big = LaurentPoly::monomial(Integer("107507208733336176461620"), 3);
    EXPECT_EQ(io::to_json(big).dump(), "[[3,\"107507208733336176461620\"]]");
    EXPECT_EQ(io::poly_from_json(io::to_json(big)), big);
}

TEST(Io, BetaSetAndBlock) {
    const BetaSet b = beta_set(P("3,1"), 4);
    EXPECT_EQ(io::beta_set_from_json(io::to_json(b)).entries, b.entries);
    const BlockId id{3, P("1"), 2};
    EXPECT_EQ(io::block_from_json(io::to_json(id)), id);
}

TEST(Io, FockVectorRoundTrip) {
    const FockVector v = bar_standard(P("2,2"), 3, 4);
    EXPECT_EQ(io::fock_vector_from_json(io::json::parse(io::to_json(v).dump())), v);
}

TEST(Io, MatrixRoundTrip) {
    const SolvedBlock s = solve_block({3, P("1"), 2});
    const io::PolyTable t{s.table.id, s.table.members, s.d};
    EXPECT_EQ(io::poly_table_from_json(io::json::parse(io::to_json(t).dump())), t);
}

TEST(Io, SuiteReportRoundTrip) {
    SuiteReport r = verify_dominance_support({{3}, 1, 1});
    r.notes.push_back("note");
    const SuiteReport back = io::suite_report_from_json(io::to_json(r));
    EXPECT_EQ(back.name, r.name);
    auto sorted = [](auto v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_EQ(sorted(back.ranges), sorted(r.ranges));
    EXPECT_EQ(back.cases, r.cases);
    EXPECT_EQ(back.notes, r.notes);
    EXPECT_EQ(io::to_json(back), io::to_json(r));
}

TEST(Io, Envelope) {
    const auto j = io::envelope("poly", io::to_json(LaurentPoly::q(1)));
    EXPECT_EQ(j.at("schema_version"), io::schema_version);
    EXPECT_EQ(j.at("kind"), "poly");
    EXPECT_EQ(j.at("data").dump(), "[[1,1]]");
}
