#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

#include "cli.hpp"

using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = nlcut::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTriangle = "0 1\n1 2\n0 2\n";
const std::string kPath4 = "0 1\n1 2\n2 3\n";

}  // namespace

TEST(Cli, GenEmitsEdgeList) {
  Result r = run({"gen", "path", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n 3\n0 1 1\n1 2 1\n");
  Result p = run({"gen", "petersen"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("n 10"), std::string::npos);
}

TEST(Cli, OracleJson) {
  Result r = run({"oracle", "maxcut"}, run({"gen", "petersen"}).out);
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["value"], "4/5");
  ASSERT_EQ(j["sets"].size(), 2u);
  Result k = run({"oracle", "minmax_k_cut", "--k", "2"}, kTriangle);
  ASSERT_EQ(k.code, 0) << k.err;
  EXPECT_EQ(Json::parse(k.out)["value"], "4");
}

TEST(Cli, CutTrace) {
  Result r = run({"cut", "cheeger_tv"}, kPath4);
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["value"], "1/3");
  EXPECT_TRUE(j.contains("trace"));
  Result flip = run({"--seed", "3", "cut", "maxcut", "--inner", "flip"}, kTriangle);
  ASSERT_EQ(flip.code, 0) << flip.err;
  EXPECT_EQ(Json::parse(flip.out)["value"], "2/3");
}

TEST(Cli, VerifyReport) {
  Result r = run({"verify", "maxcut", "--lambda", "2/3", "--x", "1,-1,-1"}, kTriangle);
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], true);
  EXPECT_TRUE(j["witness"].contains("z"));
  Result no = run({"verify", "maxcut", "--lambda", "1/2", "--x", "1,-1,-1"}, kTriangle);
  ASSERT_EQ(no.code, 0);
  EXPECT_EQ(Json::parse(no.out)["verdict"], false);
}

TEST(Cli, NodalSpectrumCheckScan) {
  Result n = run({"nodal", "--x", "1,0,-1", "--convention", "sign"}, "0 1\n1 2\n");
  ASSERT_EQ(n.code, 0) << n.err;
  EXPECT_EQ(Json::parse(n.out)["S"], 2);
  Result s = run({"spectrum"}, "0 1\n");
  ASSERT_EQ(s.code, 0) << s.err;
  Json ev = Json::parse(s.out)["eigenvalues"];
  EXPECT_NEAR(ev[1].get<double>(), 2.0, 1e-12);
  Result c = run({"check", "--suite", "cheeger"}, kPath4);
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(Json::parse(c.out)["all_hold"], true);
  Result sc = run({"scan", "maxcut"}, kTriangle);
  ASSERT_EQ(sc.code, 0) << sc.err;
  EXPECT_EQ(Json::parse(sc.out)["spectrum"].size(), 2u);
}

TEST(Cli, JsonGraphInput) {
  Result r = run({"oracle", "cheeger"}, R"({"n": 4, "edges": [[0, 1, "1"], [1, 2, "1"], [2, 3, "1"]]})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["value"], "1/3");
}

TEST(Cli, OutputFormats) {
  Result csv = run({"--format", "csv", "oracle", "maxcut"}, kTriangle);
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("oracle,value", 0), 0u);
  Result table = run({"--format", "table", "oracle", "maxcut"}, kTriangle);
  ASSERT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("2/3"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"oracle"}, kTriangle).code, 2);
  EXPECT_EQ(run({"oracle", "nope"}, kTriangle).code, 1);
  EXPECT_EQ(run({"oracle", "cheeger"}, "0 0 1\n").code, 1);
  EXPECT_EQ(run({"verify", "maxcut", "--lambda", "1", "--x", "0,0,0"}, kTriangle).code, 1);
  EXPECT_EQ(run({"--cap", "2", "oracle", "maxcut"}, kTriangle).code, 1);
  Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("oracle"), std::string::npos);
}

TEST(Cli, RepeatableOutput) {
  std::string g = run({"--seed", "4", "gen", "random", "7"}).out;
  EXPECT_EQ(g, run({"--seed", "4", "gen", "random", "7"}).out);
  Result a = run({"--jobs", "1", "scan", "signless"}, g);
  Result b = run({"--jobs", "2", "scan", "signless"}, g);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}
