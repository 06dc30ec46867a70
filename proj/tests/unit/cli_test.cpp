// Runs the ddsim executable end to end.

#include "ddsim/csv.hpp"
#include "ddsim/serialization.hpp"
#include "ddsim/simulator.hpp"

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace ddsim;

namespace {

class Cli : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        dir_ = fs::temp_directory_path() / "ddsim_cli_test";
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        SimConfig c;
        c.num_cases = 150;
        c.seed = 21;
        write_csv(simulate(fixtures::two_gateway_model().model, c).log, dir_ / "log.csv");
    }

    static int run(const std::string& args, const std::string& env = "") {
        const std::string cmd = env + " " + DDSIM_CLI_PATH + " " + args + " > " + (dir_ / "stdout.txt").string() +
                                " 2> " + (dir_ / "stderr.txt").string();
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    static std::string slurp(const fs::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    static std::string p(const std::string& name) { return (dir_ / name).string(); }

    static fs::path dir_;
};

fs::path Cli::dir_;

}  // namespace

TEST_F(Cli, Stats) {
    EXPECT_EQ(run("stats --log " + p("log.csv") + " --json"), 0);
    EXPECT_NE(slurp(dir_ / "stdout.txt").find("\"traces\": 150"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run(""), 1);
    EXPECT_EQ(run("stats"), 1);
    EXPECT_EQ(run("frobnicate"), 1);
    EXPECT_EQ(run("split --log " + p("log.csv") + " --ratio 1.5 --train a --test b"), 1);
}

TEST_F(Cli, DataErrors) {
    EXPECT_EQ(run("stats --log " + p("missing.csv")), 2);
    std::ofstream(dir_ / "bad.csv") << "case_id,activity\n1,A\n";
    EXPECT_EQ(run("stats --log " + p("bad.csv")), 2);
    EXPECT_NE(slurp(dir_ / "stderr.txt").find("start_timestamp"), std::string::npos);
}

TEST_F(Cli, PipelineError) {
    // near-certain self loop with a tiny case-length cap
    ProcessModelBuilder b;
    const auto s = b.add_start(), j = b.add_gateway(NodeKind::xor_join), a = b.add_task("A");
    const auto x = b.add_gateway(NodeKind::xor_split), e = b.add_end();
    b.connect(s, j);
    b.connect(j, a);
    b.connect(a, x);
    const auto back = b.connect(x, j);
    const auto out = b.connect(x, e);
    BranchingProbabilities br;
    br.splits[x] = {{back, 0.999}, {out, 0.001}};
    const auto m = assemble_bps_model(b.build(), br, DistributionSpec::fixed(10), {{"A", DistributionSpec::fixed(1)}},
                                      {ResourcePool{"p", {"r"}}}, {{"A", "p"}}, 5);
    save_bps_model(m, dir_ / "loop.json");
    EXPECT_EQ(run("simulate --model " + p("loop.json") + " --cases 20 --out " + p("loop.csv")), 3);
}

TEST_F(Cli, SplitDiscoverSimulateEvaluate) {
    ASSERT_EQ(run("split --log " + p("log.csv") + " --train " + p("train.csv") + " --test " + p("test.csv")), 0);
    ASSERT_EQ(run("discover --log " + p("train.csv") + " --trials 3 --runs 2 --seed 4 --out " + p("model.json") +
                  " --history " + p("history.json")),
              0);
    EXPECT_NE(slurp(dir_ / "history.json").find("\"mean_els\""), std::string::npos);
    ASSERT_EQ(run("simulate --model " + p("model.json") + " --cases 45 --seed 2 --start 2024-05-01T08:00:00Z --out " +
                  p("gen.csv") + " --audit " + p("audit.jsonl")),
              0);
    const auto gen = read_csv(dir_ / "gen.csv");
    EXPECT_EQ(gen.size(), 45u);
    EXPECT_FALSE(slurp(dir_ / "audit.jsonl").empty());
    ASSERT_EQ(run("evaluate --generated " + p("gen.csv") + " --truth " + p("test.csv") + " --bins 50 --normalize-emd"),
              0);
    const auto out = slurp(dir_ / "stdout.txt");
    EXPECT_NE(out.find("\"cfls\""), std::string::npos);
    EXPECT_NE(out.find("ELS"), std::string::npos);
}

TEST_F(Cli, DiscoverWithoutSearch) {
    EXPECT_EQ(run("discover --log " + p("log.csv") + " --trials 0 --eta 0.2 --epsilon 0.3 --branching equiprobable "
                  "--out " + p("fixed.json")),
              0);
    EXPECT_NO_THROW(load_bps_model(dir_ / "fixed.json"));
    EXPECT_EQ(run("discover --log " + p("log.csv") + " --trials 0 --branching maybe --out " + p("x.json")), 1);
}

TEST_F(Cli, ExperimentIsReproducible) {
    std::ofstream(dir_ / "exp.json") << R"({"log_path": "log.csv", "trials": 2, "runs_per_trial": 2,
                                           "generated_logs": 3, "seed": 11})";
    ASSERT_EQ(run("experiment --config " + p("exp.json") + " --out " + p("r1.json") + " --table " + p("t1.txt")), 0);
    ASSERT_EQ(run("experiment --config " + p("exp.json") + " --out " + p("r2.json") + " --table " + p("t2.txt")), 0);
    EXPECT_EQ(slurp(dir_ / "t1.txt"), slurp(dir_ / "t2.txt"));
    EXPECT_EQ(slurp(dir_ / "r1.json"), slurp(dir_ / "r2.json"));
    EXPECT_NE(slurp(dir_ / "t1.txt").find("dds *"), std::string::npos);
    // flags override the file
    ASSERT_EQ(run("experiment --config " + p("exp.json") + " --seed 12 --out " + p("r3.json")), 0);
    EXPECT_NE(slurp(dir_ / "r1.json"), slurp(dir_ / "r3.json"));
}

TEST_F(Cli, LogLevelFromEnvironment) {
    EXPECT_EQ(run("stats --log " + p("log.csv"), "DDSIM_LOG_LEVEL=info"), 0);
    EXPECT_NE(slurp(dir_ / "stderr.txt").find("[info] reading"), std::string::npos);
    EXPECT_EQ(run("stats --log " + p("log.csv"), "DDSIM_LOG_LEVEL=error"), 0);
    EXPECT_EQ(slurp(dir_ / "stderr.txt"), "");
}
