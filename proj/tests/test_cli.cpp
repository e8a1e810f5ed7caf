#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "sprad/cli.hpp"

using namespace sprad;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sprad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SPRAD_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Report, PathOnThree) {
  const auto r = run({"report", data("p3.txt"), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["matrices"]["adjacency"]["exact"].get<double>(), 1.41421356);
  EXPECT_EQ(j["matrices"]["adjacency"]["bound"].get<double>(), 1.41421356);
  EXPECT_LE(j["matrices"]["adjacency"]["gap"].get<double>(), 1e-9);
  EXPECT_EQ(j["classification"]["label"], "BipartiteSemiRegular(2,1)");
  EXPECT_EQ(j["input"]["type"], "graph");
}

TEST(Report, CompleteOnFour) {
  const auto r = run({"report", data("k4.txt"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["matrices"]["signless-laplacian"]["exact"].get<double>(), 6.0);
  EXPECT_LE(std::abs(j["matrices"]["signless-laplacian"]["gap"].get<double>()), 1e-9);
  EXPECT_EQ(j["matrices"]["laplacian"]["exact"].get<double>(), 4.0);
  EXPECT_EQ(j["matrices"]["laplacian"]["bound"].get<double>(), 6.0);
}

TEST(Report, DisconnectedTextOutput) {
  const auto r = run({"report", data("disconnected.txt")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("matrices.distance.skipped: disconnected\n"), std::string::npos);
  const auto d = run({"report", data("one_arc.txt")});
  ASSERT_EQ(d.code, kExitOk);
  EXPECT_NE(d.out.find("matrices.distance.skipped: not strongly connected\n"), std::string::npos);
}

TEST(Report, MatrixInputIsDetected) {
  const auto r = run({"report", data("m12.mtx"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out)["input"]["type"], "matrix");
}

TEST(Report, IdenticalRunsAreByteIdentical) {
  EXPECT_EQ(run({"report", data("c3.txt")}).out, run({"report", data("c3.txt")}).out);
}

TEST(Report, ToleranceFlags) {
  const auto r = run({"report", data("p3.txt"), "--json", "--tolerance-gap", "1e-6", "--tolerance-eq", "1e-7"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["tolerances"]["gap"].get<double>(), 1e-6);
  EXPECT_EQ(j["tolerances"]["eq"].get<double>(), 1e-7);
  EXPECT_EQ(run({"report", data("p3.txt"), "--tolerance-gap", "-1"}).code, kExitInputError);
}

TEST(CheckMatrix, Example) {
  const auto r = run({"check-matrix", data("m12.mtx"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["bound"]["bound"].get<double>(), 6.0);
  EXPECT_EQ(j["bound"]["exact"].get<double>(), 5.37228132);
  EXPECT_EQ(j["row_sums"]["min"].get<double>(), 3.0);
  EXPECT_EQ(j["row_sums"]["max"].get<double>(), 7.0);
}

TEST(CheckMatrix, SignedRouting) {
  const auto r = run({"check-matrix", data("signed.mtx"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out)["bound"]["kind"], "modulus");
  const auto strict = run({"check-matrix", data("signed.mtx"), "--require-nonnegative"});
  EXPECT_EQ(strict.code, kExitInputError);
  EXPECT_EQ(json::parse(strict.err)["error"]["code"], "NegativeEntry");
}

TEST(Classify, Cycle) {
  const auto r = run({"classify", data("c6.txt")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("label: Regular(2)\n"), std::string::npos);
}

TEST(Fuzz, CleanRun) {
  const auto r = run({"fuzz", "--model", "gnp", "--trials", "100", "--seed", "7", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.out;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_FALSE(j.contains("wall_seconds"));
}

TEST(Fuzz, SameSeedSameBytes) {
  const std::vector<std::string> args{"fuzz", "--model", "digraph-gnp", "--trials", "50", "--seed", "11",
                                      "--density", "0.2", "--density", "0.5"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"fuzz", "--model", "digraph-gnp", "--trials", "50", "--seed", "12"}).out);
}

TEST(Fuzz, SelectedPropertiesAndTiming) {
  const auto r = run({"fuzz", "--model", "nonneg-matrix", "--trials", "20", "--property", "matrix-bound-soundness",
                      "--timing", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["properties"].size(), 1U);
  EXPECT_EQ(j["properties"]["matrix-bound-soundness"]["pass"], 20);
  EXPECT_TRUE(j.contains("wall_seconds"));
}

TEST(Search, RegularModel) {
  const auto r = run({"search", "--model", "random-regular", "--degree", "3", "--n-min", "4", "--n-max", "10",
                      "--trials", "5", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_GE(json::parse(r.out)["count"].get<int>(), 10);
}

TEST(Errors, ExitCodesAndErrorObject) {
  struct Case {
    std::vector<std::string> args;
    int code;
    std::string errc;
  };
  const std::vector<Case> cases{
      {{"report", data("loop.txt")}, kExitInputError, "InvariantViolation"},
      {{"report", data("short.txt")}, kExitInputError, "ParseError"},
      {{"report", data("nonsquare.mtx")}, kExitInputError, "NonSquare"},
      {{"report", data("missing.txt")}, kExitInputError, "IoError"},
      {{"check-matrix", data("p3.txt")}, kExitInputError, "ParseError"},
      {{"classify", data("c3.txt")}, kExitInputError, "InvalidConfig"},
      {{"fuzz", "--model", "bogus"}, kExitInputError, "InvalidConfig"},
      {{"fuzz", "--property", "bogus"}, kExitInputError, "UnknownProperty"},
      {{"fuzz", "--n-min", "5", "--n-max", "2"}, kExitInputError, "InvalidConfig"},
      {{"fuzz", "--density", "0"}, kExitInputError, "InvalidConfig"},
      {{"frobnicate"}, kExitInputError, "InvalidConfig"},
  };
  for (const auto& c : cases) {
    const auto r = run(c.args);
    EXPECT_EQ(r.code, c.code) << c.args[0] << ' ' << c.args.back();
    const auto j = json::parse(r.err);
    EXPECT_EQ(j["error"]["code"], c.errc) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
  const auto loop = json::parse(run({"report", data("loop.txt")}).err);
  EXPECT_EQ(loop["error"]["line"], 2);
}

TEST(Help, ExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("report"), std::string::npos);
}
