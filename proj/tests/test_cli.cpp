#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "blcalc/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "blcalc");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = blcalc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, ChainEval) {
  auto r = run({"chain", "eval", "L2+W1", "--op", "mul", "--x", "0:1", "--y", "0:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["result"], "0:0");
  EXPECT_EQ(j["schema"], "blcalc/1");
  EXPECT_EQ(run({"chain", "eval", "U", "--op", "imp", "--x", "0:2/3", "--y", "0:1/2"}).json()["result"], "0:5/6");
}

TEST(Cli, ChainDecomposeFromTable) {
  auto path = temp_file("goedel.json",
                        R"({"size": 3, "mul": [[0,0,0],[0,1,1],[0,1,2]], "imp": [[2,2,2],[0,2,2],[0,1,2]],
                            "bottom_designated": false})");
  auto r = run({"chain", "decompose", "--table", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["chain"], "W1+W1");
}

TEST(Cli, ChainCheckAndFlatten) {
  auto r = run({"chain", "check", "L2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["bl"], true);
  EXPECT_EQ(r.json()["mv"], true);
  auto f = run({"chain", "flatten", "T"});
  EXPECT_EQ(f.json()["size"], 1);
  auto bad = temp_file("bad.json", R"({"size": 2, "mul": [[0,0],[0,1]], "imp": [[1,0],[0,1]]})");
  EXPECT_EQ(run({"chain", "check", "--table", bad}).code, 1);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"chain", "eval", "L2+", "--op", "mul", "--x", "top", "--y", "top"}).code, 2);
  EXPECT_EQ(run({"chain", "eval", "W2", "--op", "pow", "--x", "top", "--y", "top"}).code, 2);
  EXPECT_EQ(run({"chain", "decompose", "--table", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  auto r = run({"classify", "bh", "--class", "[W1 X]"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 4"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, AmalgamSearch) {
  auto r = run({"amalgam", "search", "--apex", "W1", "--left", "W2", "--right", "W3", "--bound", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"], "W6");
  EXPECT_EQ(r.json()["commutes"], true);
  auto none = run({"amalgam", "search", "--apex", "T", "--left", "W1", "--right", "Z", "--universe", "[W1]|[Z]"});
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.json()["result"], "none within bounds");
  EXPECT_EQ(none.json()["exhaustive"], true);
  auto id = run({"amalgam", "construct", "--apex", "W2", "--left", "W2", "--right", "W2"});
  EXPECT_EQ(id.json()["result"], "W2");
}

TEST(Cli, AmalgamOneSidedAndMaps) {
  auto r = run({"amalgam", "one-sided", "--apex", "T", "--left", "W1", "--right", "Z", "--universe", "[W1]|[Z]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["amalgam"]["one_sided"], true);
  auto m = run({"amalgam", "search", "--apex", "W1", "--left", "W1+W1", "--right", "W1", "--left-map", "1"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.json()["span"]["left"]["components"][0]["target"], 1);
  EXPECT_EQ(run({"amalgam", "search", "--apex", "W2", "--left", "W3", "--right", "W2"}).code, 2);
}

TEST(Cli, Classify) {
  auto r = run({"classify", "bl", "--class", "[UM U*]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["ap"], true);
  auto g = run({"classify", "bh", "--gens", "W1+W1"});
  EXPECT_EQ(g.code, 1);
  EXPECT_EQ(g.json()["witness"], "W1+W1+W1");
  auto z = run({"classify", "bh", "--class", "[(W1 Z)*]"});
  EXPECT_EQ(z.json()["interval"], "I(W1,Z)");
  auto two = run({"classify", "wh", "--gens", "W2", "--gens", "W3"});
  EXPECT_EQ(two.json()["input"], "V(W2, W3)");
  EXPECT_EQ(run({"classify", "bh", "--gens", "W1", "--class", "[W1]"}).code, 2);
}

TEST(Cli, Poset) {
  auto d = run({"poset", "--interval", "I(W1,Z)", "--format", "dot"});
  ASSERT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("digraph"), std::string::npos);
  auto j = run({"poset", "--interval", "I(Wn,Z)", "--params", "2"}).json();
  EXPECT_EQ(j["nodes"].size(), 13u);
  EXPECT_EQ(j["covers"].size(), 22u);
  EXPECT_EQ(run({"poset", "--interval", "I(Wo2)"}).json()["nodes"].size(), 3u);
  EXPECT_EQ(run({"poset", "--interval", "I(X)"}).code, 2);
  EXPECT_EQ(run({"poset", "--interval", "I(W1)", "--format", "svg"}).code, 2);
}

TEST(Cli, Logic) {
  auto i = run({"logic", "interpolate", "--premise", "p/\\q", "--conclusion", "p\\/r", "--gens", "W1"});
  ASSERT_EQ(i.code, 0) << i.err;
  EXPECT_EQ(i.json()["interpolant"], "p");
  auto d = run({"logic", "dip", "--class", "[L1 Z]"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.json()["deductive_interpolation"], true);
  auto c = run({"logic", "consequence", "--premise", "p", "--conclusion", "p*p", "--gens", "L2", "--implication"});
  EXPECT_EQ(c.code, 1);
  EXPECT_EQ(c.json()["countermodel"]["valuation"]["p"], "0:1");
  auto ok = run({"logic", "consequence", "--premise", "p", "--conclusion", "p*p", "--gens", "L2"});
  EXPECT_EQ(ok.code, 0);
  auto none = run({"logic", "interpolate", "--premise", "(p -> (q /\\ p)) -> p", "--conclusion",
                   "r \\/ (r -> p) * (p -> p)", "--gens", "W1+W1"});
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(run({"logic", "interpolate", "--premise", "p*q", "--conclusion", "p", "--gens", "Z"}).code, 2);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> cmd{"amalgam", "search", "--apex", "W1", "--left", "W2+Z", "--right", "W3"};
  EXPECT_EQ(run(cmd).out, run(cmd).out);
}
