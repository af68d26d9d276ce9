#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "test_support.hpp"
#include "tripack/cli.hpp"
#include "tripack/graph_io.hpp"

using namespace tripack;
using namespace tripack::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixture(name).string(); }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, SolveFigure1) {
  auto r = run_cli({"solve", fx("figure1.graph")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "value: 5"));
  EXPECT_TRUE(contains(r.out, "transversal (5): 0-2 0-9 1-2 1-9 3-8"));
  EXPECT_TRUE(contains(r.out, "packing (5):"));
  EXPECT_TRUE(contains(r.out, "transversal ok, packing ok, sizes equal"));
}

TEST(Cli, SolveMachineIsDeterministic) {
  auto a = run_cli({"solve", fx("figure1.graph"), "--machine"});
  auto b = run_cli({"solve", fx("figure1.graph"), "--machine"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(contains(a.out, "\"value\": 5"));
}

TEST(Cli, SolveApexC) {
  auto r = run_cli({"solve", fx("apex_c.graph")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "apex part C"));
}

TEST(Cli, ExportNetwork) {
  auto r = run_cli({"solve", fx("figure1.graph"), "--export-network", "-"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "E:3-8/in E:3-8/out 1"));
}

TEST(Cli, OracleAllAgrees) {
  auto r = run_cli({"oracle", "--all", fx("figure1.graph")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "agreement: all 5 values equal 5"));
}

TEST(Cli, OracleEnumerate) {
  auto r = run_cli({"oracle", fx("figure1.graph"), "--enumerate-min"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "minimum transversals (1):"));
}

TEST(Cli, OracleBoundsOnGeneralGraph) {
  auto r = run_cli({"oracle", fx("one_complete_side.graph")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "holds"));
}

TEST(Cli, OracleBudgetExceeded) {
  auto r = run_cli({"oracle", fx("figure1.graph"), "--budget", "triangles=3"});
  EXPECT_EQ(r.code, cli::kBudgetExceeded);
  EXPECT_TRUE(contains(r.err, "budget"));
}

TEST(Cli, BadBudgetIsUsageError) {
  EXPECT_EQ(run_cli({"oracle", fx("figure1.graph"), "--budget", "triangles"}).code, cli::kUsage);
  EXPECT_THROW(cli::parse_budget("speed=3"), std::invalid_argument);
  auto b = cli::parse_budget("triangles=9,seconds=2");
  EXPECT_EQ(b.max_triangles, 9u);
  EXPECT_EQ(b.time_limit, std::chrono::milliseconds(2000));
}

TEST(Cli, NotBilaterallyComplete) {
  auto r = run_cli({"solve", fx("one_complete_side.graph")});
  EXPECT_EQ(r.code, cli::kNotBilaterallyComplete);
  EXPECT_TRUE(contains(r.err, "not bilaterally-complete"));
}

TEST(Cli, ParseAndValidationErrors) {
  EXPECT_EQ(run_cli({"solve", fx("invalid/syntax.graph")}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"solve", fx("invalid/edge_within_part.graph")}).code, cli::kValidationError);
  EXPECT_EQ(run_cli({"solve", fx("missing.graph")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
}

TEST(Cli, Verify) {
  auto g = fx("figure1.graph");
  auto cert = [](const std::string& n) { return fx("certificates/" + n); };
  EXPECT_EQ(run_cli({"verify", g, "--transversal", cert("figure1_transversal.txt")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"verify", g, "--transversal", cert("figure1_bc_side.txt")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"verify", g, "--packing", cert("figure1_packing.txt")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"verify", g, "--transversal", cert("figure1_not_transversal.txt")}).code,
            cli::kVerificationMismatch);
  EXPECT_EQ(run_cli({"verify", g, "--packing", cert("figure1_overlapping_packing.txt")}).code,
            cli::kVerificationMismatch);
  EXPECT_EQ(run_cli({"verify", g}).code, cli::kUsage);
}

TEST(Cli, GenIsDeterministicAndParses) {
  std::vector<std::string> args{"gen", "--p", "2", "--q", "4", "--r", "4", "--density", "0.4",
                                "--seed", "42"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(contains(a.out, "# generated: mode=bilateral"));
  EXPECT_EQ(parse_graph(a.out), generate({2, 4, 4, 0.4, GenMode::BilaterallyComplete, 1, 1, 42}));
}

TEST(Cli, GenToFile) {
  auto path = std::filesystem::temp_directory_path() / "tripack_cli_gen.graph";
  auto r = run_cli({"gen", "--p", "1", "--q", "2", "--r", "2", "--mode", "complete", "-o", path.string()});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(load_graph(path), complete_tripartite(1, 2, 2));
  std::filesystem::remove(path);
}

TEST(Cli, Triangles) {
  auto r = run_cli({"triangles", fx("figure1.graph")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "triangles (14):"));
  auto m = run_cli({"triangles", fx("figure1.graph"), "--machine"});
  EXPECT_TRUE(contains(m.out, "\"count\": 14"));
}
