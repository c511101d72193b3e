#include "../support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

using namespace hgame;
using namespace hgame::testing;

namespace {

struct Run {
    int rc = -1;
    std::string out;
};

// Runs the CLI through the shell, after an optional pipeline prefix; stderr
// is discarded.
Run cli(const std::string& args, const std::string& prefix = "")
{
    std::string cmd = prefix + "'" + HGAME_CLI + "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& f) { return std::string("'") + HGAME_DATA_DIR + "/" + f + "'"; }

class Scratch {
public:
    Scratch()
    {
        dir_ = std::filesystem::temp_directory_path() /
               ("hgame-cli-" + std::to_string(::getpid()) + "-" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
    }
    ~Scratch() { std::filesystem::remove_all(dir_); }
    std::string path(const std::string& f) const { return (dir_ / f).string(); }

private:
    std::filesystem::path dir_;
};

}  // namespace

TEST(Cli, WorkedExample)
{
    auto cv = cli("verify cv " + data("example.game") + " " + data("example.part"));
    EXPECT_EQ(cv.rc, 0);
    EXPECT_EQ(cv.out, "STABLE\n");

    auto scv = cli("verify scv " + data("example.game") + " " + data("example.part"));
    EXPECT_EQ(scv.rc, 3);
    EXPECT_EQ(scv.out.substr(0, 8), "BLOCKED\n");
    auto cert = parse_certificate(scv.out, 3);
    EXPECT_EQ(cert.coalition, (Coalition{1, 2}));
    EXPECT_EQ(cert.strict_improvers, (std::vector<int>{2}));

    EXPECT_EQ(cli("exists sce " + data("example.game")).rc, 3);
    auto n = cli("exists sce-n " + data("example_neutral.game"));
    EXPECT_EQ(n.rc, 0);
    EXPECT_EQ(n.out.substr(0, 4), "YES\n");
    EXPECT_EQ(cli("verify scv " + data("example_neutral.game") + " " + data("example.part")).out, "STABLE\n");
}

TEST(Cli, RingHasNoCoreStablePartition)
{
    auto r = cli("--json exists ce-n " + data("fig2.game"));
    EXPECT_EQ(r.rc, 3);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["verdict"], "NO");
    EXPECT_EQ(j["problem"], "ce-n");
    EXPECT_GT(j["nodes"].get<long>(), 0);
    EXPECT_EQ(cli("gen fig2").out.find("agents 20") != std::string::npos, true);
}

TEST(Cli, SolveThenVerifyPipeline)
{
    Scratch s;
    for (int seed = 0; seed < 50; ++seed) {
        std::string inst = s.path("g" + std::to_string(seed) + ".game");
        int n = 1 + seed % 10;
        ASSERT_EQ(cli("gen random -n " + std::to_string(n) + " --p-friend 0.5 --mode complete --seed " +
                      std::to_string(seed) + " -o '" + inst + "'")
                      .rc,
                  0);
        auto g = parse_instance(read_text(inst));
        EXPECT_EQ(g, gen_random(n, 0.5, 0, seed, Mode::Complete));
        std::string solve = std::string("'") + HGAME_CLI + "' solve cf '" + inst + "' | ";
        auto r = cli("verify cv '" + inst + "' -", solve);
        EXPECT_EQ(r.rc, 0) << inst;
        EXPECT_EQ(r.out, "STABLE\n");
    }
}

TEST(Cli, ExitCodes)
{
    Scratch s;
    EXPECT_EQ(cli("").rc, 1);
    EXPECT_EQ(cli("bogus").rc, 1);
    EXPECT_EQ(cli("verify cv").rc, 1);
    EXPECT_EQ(cli("verify cv /nonexistent/x.game /nonexistent/x.part").rc, 2);
    std::ofstream(s.path("bad.game")) << "agents 2\nmode complete\nfriend 1 7\n";
    EXPECT_EQ(cli("validate '" + s.path("bad.game") + "'").rc, 2);
    EXPECT_EQ(cli("--budget 3 exists ce-n " + data("fig2.game")).rc, 4);
    EXPECT_EQ(cli("oracle ce " + data("fig2.game")).rc, 4);  // size guard
    EXPECT_EQ(cli("exists sce " + data("example_neutral.game")).rc, 2);  // mode mismatch
    EXPECT_EQ(cli("validate " + data("example.game")).rc, 0);
}

TEST(Cli, JsonOutput)
{
    auto r = cli("--json verify scv " + data("example.game") + " " + data("example.part"));
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["verdict"], "BLOCKED");
    EXPECT_EQ(j["certificate"]["coalition"], nlohmann::json::array({2, 3}));
    EXPECT_EQ(j["certificate"]["weak"], true);

    auto s = nlohmann::json::parse(cli("--json solve cf " + data("example.game")).out);
    EXPECT_EQ(s["partition"], nlohmann::json::parse("[[1,2],[3]]"));
    EXPECT_EQ(s["strategy"], "bipartite-friend");

    auto e = cli("--json verify cv " + data("example.game") + " /nonexistent/x.part");
    EXPECT_EQ(e.rc, 2);
    auto je = nlohmann::json::parse(e.out);
    EXPECT_EQ(je["verdict"], "ERROR");
    EXPECT_EQ(je["error"], "IoError");
}

TEST(Cli, OracleAgreesWithLibrary)
{
    EXPECT_EQ(cli("oracle sat " + data("cnf/unsat_a.cnf")).rc, 3);
    EXPECT_EQ(cli("oracle sat " + data("cnf/unsat_b.cnf")).rc, 3);
    EXPECT_EQ(cli("oracle tripack " + data("tripack/g00.edges")).rc == 0,
              brute_triangle_partition(parse_edge_list(read_text(HGAME_DATA_DIR "/tripack/g00.edges"))).has_value());
    EXPECT_EQ(cli("oracle scv " + data("example.game") + " " + data("example.part")).rc, 3);
}
