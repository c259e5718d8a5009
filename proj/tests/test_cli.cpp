#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "backbone/generators.hpp"
#include "backbone/graph_io.hpp"

namespace backbone {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("backbone_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_ / "corpus");
        write("k3.txt", "0 1\n1 2\n2 0\n");
        write("ten.txt", "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n2 3\n2 4\n3 4\n4 5\n");
        writeEdgeListFile((dir_ / "corpus" / "a.txt").string(),
                          socialNetwork({.nodes = 120, .groups = 3, .minLinks = 2, .maxLinks = 6}, 1));
        writeEdgeListFile((dir_ / "corpus" / "b.txt").string(),
                          socialNetwork({.nodes = 90, .groups = 3, .minLinks = 2, .maxLinks = 5}, 2));
    }
    void TearDown() override { fs::remove_all(dir_); }

    void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }

    std::string read(const std::string& name) const {
        std::ifstream in(dir_ / name, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    /// Runs the CLI with stdout to `stdoutName` and returns its exit status.
    int run(const std::string& args, const std::string& stdoutName = "stdout.txt") const {
        const std::string cmd = std::string("cd '") + dir_.string() + "' && '" BACKBONE_CLI_PATH "' " + args +
                                " > '" + stdoutName + "' 2> stderr.txt";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    fs::path dir_;
};

TEST_F(CliTest, ScoreWritesOneLinePerEdge) {
    ASSERT_EQ(run("score k3.txt --method ld"), 0);
    EXPECT_EQ(read("stdout.txt"), "# method=ld m=3\n0 1 1\n0 2 1\n1 2 0\n");
}

TEST_F(CliTest, ScoreIsReproducible) {
    ASSERT_EQ(run("score ten.txt --method re --seed 7 --out a.scores"), 0);
    ASSERT_EQ(run("score ten.txt --method re --seed 7 --out b.scores"), 0);
    EXPECT_EQ(read("a.scores"), read("b.scores"));
    ASSERT_EQ(run("score ten.txt --method re --seed 8 --out c.scores"), 0);
    EXPECT_NE(read("a.scores"), read("c.scores"));
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run("score k3.txt --method nope"), 2);
    EXPECT_NE(read("stderr.txt").find("unknown method"), std::string::npos);
    EXPECT_EQ(run("score missing.txt --method ls"), 1);
    EXPECT_EQ(run("sparsify k3.txt --method ls --ratio 1.5"), 2);
    EXPECT_EQ(run("sparsify k3.txt --method ls --ratio -0.1"), 2);
    EXPECT_EQ(run("frobnicate"), 2);
    EXPECT_EQ(run("score k3.txt"), 2);
    EXPECT_EQ(run("sweep empty_dir_that_is_missing"), 1);
    fs::create_directories(dir_ / "empty");
    EXPECT_EQ(run("sweep empty"), 1);
    write("bad.txt", "0 1\nzero\n");
    EXPECT_EQ(run("score bad.txt --method tri"), 1);
    EXPECT_EQ(run("score k3.txt --method eff --eff-p 1.5"), 2);
    EXPECT_EQ(run("--help"), 0);
}

TEST_F(CliTest, SparsifyRoundTripsAtFullRatio) {
    ASSERT_EQ(run("sparsify ten.txt --method ls --ratio 1.0 --out full.txt"), 0);
    EXPECT_EQ(read("stdout.txt"), "kept=10 of 10\n");
    EXPECT_EQ(loadEdgeListFile(path("full.txt")), loadEdgeListFile(path("ten.txt")));
}

TEST_F(CliTest, SparsifyHalf) {
    ASSERT_EQ(run("sparsify ten.txt --method tri --ratio 0.5 --out half.txt"), 0);
    EXPECT_EQ(read("stdout.txt"), "kept=5 of 10\n");
    EXPECT_EQ(loadEdgeListFile(path("half.txt")).numberOfEdges(), 5u);
}

TEST_F(CliTest, SparsifyFromScoreFile) {
    ASSERT_EQ(run("score k3.txt --method ls --out k3.scores"), 0);
    ASSERT_EQ(run("sparsify k3.txt --scores k3.scores --ratio 0.67 --out kept.txt"), 0);
    EXPECT_EQ(read("kept.txt"), "0 1\n0 2\n");
    ASSERT_EQ(run("score ten.txt --method ls --out ten.scores"), 0);
    EXPECT_EQ(run("sparsify k3.txt --scores ten.scores --ratio 0.5"), 1);
    EXPECT_FALSE(read("stderr.txt").empty());
}

TEST_F(CliTest, SweepDefaultsCardinality) {
    ASSERT_EQ(run("sweep corpus/a.txt"), 0);
    const std::string out = read("stdout.txt");
    EXPECT_EQ(out.substr(0, out.find('\n')), "graph,method,ratio,measure,value");
    EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 1 + 7 * 20 * 8);
}

TEST_F(CliTest, SweepJsonAndAggregate) {
    ASSERT_EQ(run("sweep corpus --methods ld,re --ratios 0.5,1 --json"), 0);
    EXPECT_EQ(read("stdout.txt").front(), '[');
    ASSERT_EQ(run("sweep corpus --methods ld --ratios 0.5 --aggregate"), 0);
    const std::string out = read("stdout.txt");
    EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 1 + 8);
    EXPECT_EQ(run("sweep corpus --ratios 0.5,0.2"), 2);
}

TEST_F(CliTest, CorrelateSymmetricUnitDiagonal) {
    ASSERT_EQ(run("correlate corpus/a.txt --methods ls,ld,tri,mod"), 0);
    std::istringstream in(read("stdout.txt"));
    std::string line;
    std::vector<std::vector<std::string>> cells;
    std::getline(in, line);
    EXPECT_EQ(line, "label,ls,ld,tri,mod");
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::istringstream fields(line);
        std::string f;
        while (std::getline(fields, f, ','))
            row.push_back(f);
        cells.push_back(std::vector<std::string>(row.begin() + 1, row.end()));
    }
    ASSERT_EQ(cells.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(cells[i][i], "1");
        for (std::size_t j = 0; j < 4; ++j)
            EXPECT_EQ(cells[i][j], cells[j][i]);
    }
}

TEST_F(CliTest, TimeListsEveryMethod) {
    ASSERT_EQ(run("time corpus --reps 1"), 0);
    const std::string out = read("stdout.txt");
    EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 1 + 2 * 7);
}

TEST_F(CliTest, OutputIndependentOfThreads) {
    const std::vector<std::string> commands{
        "score corpus/a.txt --method eff",  "score corpus/a.txt --method ts",
        "sparsify corpus/a.txt --method qls --ratio 0.3", "evaluate corpus/a.txt --method ld --ratio 0.2",
        "sweep corpus --methods re,ld,eff --ratios 0.2,0.6", "correlate corpus",
    };
    for (const auto& cmd : commands) {
        ASSERT_EQ(run(cmd + " --threads 1", "one.txt"), 0) << cmd;
        ASSERT_EQ(run(cmd + " --threads 4", "four.txt"), 0) << cmd;
        EXPECT_EQ(read("one.txt"), read("four.txt")) << cmd;
    }
    ASSERT_EQ(run("score corpus/b.txt --method eff", "env_default.txt"), 0);
    ASSERT_EQ(run("score corpus/b.txt --method eff --threads 3", "three.txt"), 0);
    EXPECT_EQ(read("env_default.txt"), read("three.txt"));
}

} // namespace
} // namespace backbone
