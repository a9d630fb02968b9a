#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "fockcb/io.hpp"

using namespace fockcb;
namespace io = fockcb::io;

namespace {

struct CliResult {
    int status;
    std::string out;
};

CliResult run(const std::string& args) {
    const std::string cmd = std::string(FOCKCB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int st = pclose(pipe);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST(Cli, Decomp) {
    EXPECT_EQ(run("decomp --e 3 --lambda 2,2 --mu 4").out, "q\n");
    EXPECT_EQ(run("decomp --e 2 --lambda 3 --mu 1,1").out, "0\n");
    const CliResult a = run("decomp --e 4 --lambda 7,4,2,1,1 --mu 11,2,1,1");
    const CliResult b = run("decomp --e 3 --lambda 5,3,2,1 --mu 8,2,1");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, RemoveRunner) {
    const CliResult r = run("remove-runner --e 4 --k 1 --lambda 7,4,2,1,1");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "5,3,2,1\n");
}

TEST(Cli, Mullineux) { EXPECT_EQ(run("mull --e 3 --mu 6,3,1").out, "3,3,2,1,1\n"); }

TEST(Cli, JsonMatchesText) {
    const CliResult j = run("--json decomp --e 3 --lambda 2,2 --mu 4");
    ASSERT_EQ(j.status, 0);
    const auto doc = io::json::parse(j.out);
    EXPECT_EQ(doc.at("schema_version"), io::schema_version);
    EXPECT_EQ(io::poly_from_json(doc.at("data")).to_string(), "q");
}

TEST(Cli, BlockMatrixJson) {
    const CliResult j = run("--json block --e 3 --core 1 --weight 1 --matrix");
    ASSERT_EQ(j.status, 0);
    const io::PolyTable t = io::poly_table_from_json(io::json::parse(j.out).at("data"));
    const SolvedBlock s = solve_block({3, Partition::parse("1"), 1});
    EXPECT_EQ(t, (io::PolyTable{{3, Partition::parse("1"), 1}, s.table.members, s.d}));
}

TEST(Cli, Verify) {
    const CliResult r = run("--json verify dominance-support --e 3 --max-weight 1 --max-core-size 2");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("\"passed\": true"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("decomp --e 1 --lambda 1 --mu 1").status, 2);
    EXPECT_EQ(run("decomp --e 3 --lambda 2,x --mu 1").status, 2);
    EXPECT_EQ(run("mull --e 2 --mu 2,2").status, 2);
    EXPECT_EQ(run("verify no-such-suite").status, 2);
    EXPECT_EQ(run("decomp --e 3").status, 2);
    EXPECT_EQ(run("remove-runner --e 4 --k 3 --lambda 7,4,2,1,1").status, 2);
}

TEST(Cli, VerifyModuliList) {
    const CliResult r = run("verify dominance-support --e 2,3 --max-weight 1 --max-core-size 2");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("e = 2,3"), std::string::npos);
}
