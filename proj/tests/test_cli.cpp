#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "wiener/io.hpp"

namespace fs = std::filesystem;
using wiener::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("wiener_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = std::string("\"") + WIENER_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

fs::path write(const std::string& name, const std::string& content) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

const std::string kFixture = std::string(WIENER_FIXTURE_DIR) + "/convex8.json";

}  // namespace

TEST(Cli, SolveFixtureMatchesFrozenOracleValue) {
  const auto r = run("solve -i \"" + kFixture + "\"");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  // Exhaustive minimum over all 8^6 trees of the fixture.
  EXPECT_NEAR(j.at("wiener").get<double>(), 59.24541682725182, 59.24541682725182 * 1e-9);
  EXPECT_EQ(j.at("tree").at("edges").size(), 7u);
  EXPECT_EQ(j.at("order").size(), 8u);
}

TEST(Cli, OracleAgreesWithSolve) {
  const auto r = run("oracle -i \"" + kFixture + "\" --mode tree");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("count").get<int>(), 262144);
  EXPECT_NEAR(j.at("value").get<double>(), 59.24541682725182, 1e-7);
}

TEST(Cli, GenerationIsByteDeterministic) {
  const auto a = run("gen convex --n 20 --seed 7");
  const auto b = run("gen convex --n 20 --seed 7");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("solve -i \"" + kFixture + "\"").out, run("solve -i \"" + kFixture + "\"").out);
}

TEST(Cli, PartitionSidecar) {
  const auto r = run("gen partition --x 1,1 --tree-subset 0");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("sidecar").at("B").get<double>(), 11.5);
  EXPECT_EQ(j.at("sidecar").at("W").get<double>(), 320.5);
  const auto doc = write("partition.json", r.out);
  const auto w = run("wiener -i \"" + doc.string() + "\"");
  ASSERT_EQ(w.code, 0);
  const auto report = json::parse(w.out);
  EXPECT_NEAR(report.at("wiener").get<double>(), 320.5, 1e-9 * 320.5);
  EXPECT_NEAR(report.at("weight").get<double>(), 11.5, 1e-9 * 11.5);
  EXPECT_TRUE(report.at("methods_agree").get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--no-such-flag").code, 2);
  EXPECT_EQ(run("gen partition --x 1,2").code, 2);
  const auto nonconvex = write("nonconvex.json", R"({"points": [[0,0],[2,0],[1,0.2],[2,2],[0,2]]})");
  EXPECT_EQ(run("solve -i \"" + nonconvex.string() + "\"").code, 2);
  const auto garbage = write("garbage.json", "{not json");
  EXPECT_EQ(run("solve -i \"" + garbage.string() + "\"").code, 2);

  const auto big = write("big.json", run("gen grid --w 5 --h 2").out);
  EXPECT_EQ(run("oracle -i \"" + big.string() + "\" --mode tree").code, 3);
  EXPECT_EQ(run("oracle -i \"" + big.string() + "\" --mode path --max-n 9").code, 3);

  EXPECT_EQ(run("oracle -i \"" + kFixture + "\" --mode budgeted --budget 0.5").code, 4);
  EXPECT_EQ(run("oracle -i \"" + kFixture + "\" --mode budgeted --budget 100").code, 0);
}

TEST(Cli, PathsTooling) {
  const auto sweep = run("paths --sweep 100");
  ASSERT_EQ(sweep.code, 0);
  EXPECT_EQ(json::parse(sweep.out).at("threshold").get<int>(), 12);

  const auto twelve = run("paths --twelve-config 1");
  ASSERT_EQ(twelve.code, 0);
  EXPECT_NE(twelve.out.find("LpRq"), std::string::npos);

  const auto grid = write("grid33.json", run("gen grid --w 3 --h 3").out);
  const auto bound = run("paths -i \"" + grid.string() + "\" --bound-check");
  ASSERT_EQ(bound.code, 0);
  const auto jb = json::parse(bound.out);
  EXPECT_EQ(jb.at("violations").get<int>(), 0);
  EXPECT_EQ(jb.at("count").get<int>(), 181440);
}

TEST(Cli, RenderMarksCrossings) {
  const auto pts = write("square.json", R"({"points": [[0,0],[2,2],[0,2],[2,0]]})");
  const auto tree = write("x.json", R"({"n": 4, "edges": [[0,1],[2,3],[0,2]]})");
  const fs::path svg = scratch() / "out.svg";
  ASSERT_EQ(run("render -i \"" + pts.string() + "\" --tree \"" + tree.string() + "\" -o \"" + svg.string() + "\"").code, 0);
  const std::string text = slurp(svg);
  std::size_t circles = 0;
  for (auto p = text.find("<circle"); p != std::string::npos; p = text.find("<circle", p + 1)) ++circles;
  EXPECT_EQ(circles, 4u);
  EXPECT_NE(text.find("class=\"crossing\""), std::string::npos);
}
