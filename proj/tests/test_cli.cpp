#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dfam/cli.hpp"

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dfam::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(DFAM_FIXTURE_DIR) + "/" + name + ".json"; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, VerifyShippedFixture) {
    const CliRun r = run({"verify", fixture("z3xz6_18_9_6_6")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("valid, λ=6, n=9"), std::string::npos) << r.out;
}

TEST(Cli, VerifyRejectsABrokenFamily) {
    const auto path = std::filesystem::temp_directory_path() / "dfam_broken.json";
    std::ofstream(path) << R"({"group":[3,3],"blocks":[[[0,0],[1,1],[2,2]],[[0,1],[0,2]]],"lambda":1})";
    const CliRun r = run({"verify", path.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("invalid"), std::string::npos);
}

TEST(Cli, CyclicSearchFindsNothing) {
    const CliRun r = run({"search", "--group", "Z18", "--params", "18;9,6;6", "--mode", "exhaustive"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"solutions\":0"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.find("\"blocks\""), std::string::npos);
}

TEST(Cli, SearchStreamsFamilies) {
    const CliRun r = run({"search", "--group", "Z3xZ3", "--params", "9;3,2;1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"blocks\""), std::string::npos);
    EXPECT_NE(r.out.find("\"pruned_by_psd\""), std::string::npos);
}

TEST(Cli, SearchIsReproducible) {
    const std::vector<std::string> args{"search", "--group", "Z3xZ6", "--params", "18;9,6;6", "--mode", "anneal",
                                        "--max-solutions", "1", "--seed", "3"};
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SearchBudgetAndInvalidInput) {
    EXPECT_EQ(run({"search", "--group", "Z18", "--params", "18;9,6;6", "--max-candidates", "100"}).code, 3);
    EXPECT_EQ(run({"search", "--group", "Z18", "--params", "18;9,5;6"}).code, 1);
    EXPECT_EQ(run({"search", "--group", "Z17", "--params", "18;9,6;6"}).code, 1);
    EXPECT_EQ(run({"search", "--group", "Z18"}).code, 1);
    EXPECT_EQ(run({"nonsense"}).code, 1);
}

TEST(Cli, ConstructSkewLegendre) {
    const CliRun r = run({"construct", fixture("z5xz5_legendre_skew"), "--array", "legendre-skew"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("order 52\n", 0), 0u);
    EXPECT_NE(r.out.find("skew=pass"), std::string::npos);
}

TEST(Cli, ConstructNeverPrintsAFailedMatrix) {
    const CliRun r = run({"construct", fixture("z5xz5_legendre_skew"), "--array", "legendre-sym"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ConstructDoWithSwap) {
    const CliRun r = run({"construct", fixture("z3xz3_9_3_2_1"), "--array", "do-sym", "--swap"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("|det|=146028888064"), std::string::npos);
    EXPECT_EQ(run({"construct", fixture("z3xz3_9_3_2_1"), "--array", "do-sym"}).code, 2);
}

TEST(Cli, ConstructGsWithBush) {
    const CliRun r = run({"construct", fixture("gs_klein"), "--array", "gs-sym", "--bush", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("bush=pass"), std::string::npos);
}

TEST(Cli, Compress) {
    const CliRun r = run({"compress", fixture("z3xz6_18_9_6_6"), "--gens", "[[0,3]]"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"paf\":{\"alpha\":0,\"alpha0\":36}"), std::string::npos) << r.out;
}

TEST(Cli, PsdTest) {
    const CliRun pass = run({"psd-test", "--group", "Z3xZ3", "--block", "[[0,0],[1,1],[2,1]]", "--params", "9;3,2;1"});
    EXPECT_EQ(pass.code, 0);
    EXPECT_NE(pass.out.find("pass (4n=16)"), std::string::npos);
    const CliRun fail = run({"psd-test", "--group", "Z9", "--block", "[0,3,6]", "--n", "4"});
    EXPECT_EQ(fail.code, 2);
}

TEST(Cli, FixturesMatchTheShippedFiles) {
    const auto dir = std::filesystem::temp_directory_path() / "dfam_fixtures_test";
    std::filesystem::remove_all(dir);
    const CliRun r = run({"fixtures", "--out", dir.string()});
    EXPECT_EQ(r.code, 0);
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        ++files;
        EXPECT_EQ(slurp(entry.path()), slurp(std::filesystem::path(DFAM_FIXTURE_DIR) / entry.path().filename()))
            << entry.path();
    }
    EXPECT_EQ(files, 9u);
}
