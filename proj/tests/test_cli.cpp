#include <gtest/gtest.h>

#include "commands.hpp"
#include "render.hpp"

namespace headorder {
namespace {

cli::Outcome run(const std::string& command, const std::string& text, bool oracle = false) {
  cli::Options o;
  o.command = command;
  o.oracle = oracle;
  return cli::run(o, parse_document_text(text));
}

const char* kFamily = R"({"type":"family","schema_version":1,"n":3,"a":2})";
const char* kTree =
    R"({"type":"tree","schema_version":1,"exceptional":0,"p":5,"a":2,"edges":[[0,1],[1,2]],"rotations":[[0],[0,1],[1]]})";

TEST(Cli, Grid) {
  const cli::Grid g = cli::parse_grid("n=2..10,a=1..30");
  EXPECT_EQ(g.n_lo, 2u);
  EXPECT_EQ(g.n_hi, 10u);
  EXPECT_EQ(g.a_lo, 1);
  EXPECT_EQ(g.a_hi, 30);
  const cli::Grid one = cli::parse_grid("n=5,a=7");
  EXPECT_EQ(one.n_lo, one.n_hi);
  EXPECT_EQ(one.a_hi, 7);
  EXPECT_THROW(cli::parse_grid("n=2..x"), Error);
  EXPECT_THROW(cli::parse_grid("a=1..3"), Error);
}

TEST(Cli, Commands) {
  EXPECT_TRUE(cli::known_command("sweep"));
  EXPECT_FALSE(cli::known_command("frobnicate"));
  cli::Options o;
  o.command = "check";
  EXPECT_TRUE(cli::needs_input(o));
}

TEST(Cli, ChainTraceHasCheckpoints) {
  const cli::Outcome out = run("chain", kFamily);
  EXPECT_EQ(out.exit_code, cli::kExitOk);
  EXPECT_EQ(out.report["type"], "report");
  EXPECT_EQ(out.report["command"], "chain");
  EXPECT_EQ(out.report["steps"].size(), 3u);
  EXPECT_EQ(out.report["final_hereditary"]["hereditary"], true);
}

TEST(Cli, VerifyFamilyAndTree) {
  EXPECT_EQ(run("verify", kFamily, true).exit_code, cli::kExitOk);
  const cli::Outcome t = run("verify", kTree, true);
  EXPECT_EQ(t.exit_code, cli::kExitOk) << t.report.dump(2);
  EXPECT_EQ(t.report["agree"], true);
}

TEST(Cli, Sweep) {
  cli::Options o;
  o.command = "sweep";
  o.grid = cli::parse_grid("n=2..5,a=1..8");
  o.workers = 3;
  const cli::Outcome out = cli::run(o, std::nullopt);
  EXPECT_EQ(out.exit_code, cli::kExitOk);
  EXPECT_EQ(out.report["total"], 32);
  EXPECT_EQ(out.report["all_agree"], true);
}

TEST(Cli, OtherCommandsRun) {
  for (const char* cmd : {"check", "radical", "head", "closed-form"}) {
    const cli::Outcome out = run(cmd, kFamily);
    EXPECT_EQ(out.exit_code, cli::kExitOk) << cmd;
  }
  EXPECT_EQ(run("tree", kTree).report["delta"].size(), 2u);
  EXPECT_EQ(run("radical", R"({"type":"exponent","schema_version":1,"matrix":[[0,2],[0,0]]})", true).exit_code,
            cli::kExitOk);
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(run("head", kTree).report.dump(), run("head", kTree).report.dump());
}

TEST(Cli, Pretty) {
  const std::string s = cli::render_pretty(run("check", R"({"type":"exponent","schema_version":1,"matrix":[[0,1],[0,0]]})").report);
  EXPECT_NE(s.find("type: report"), std::string::npos) << s;
  EXPECT_NE(s.find("    [0 1]\n    [0 0]"), std::string::npos) << s;
}

}  // namespace
}  // namespace headorder
