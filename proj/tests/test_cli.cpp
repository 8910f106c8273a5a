#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "kirillov/cli.hpp"

using namespace kirillov;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

IntPoly poly_from_json(const Json& coeffs) {
  std::vector<BigInt> c;
  for (const auto& x : coeffs) c.emplace_back(x.get<std::string>());
  return IntPoly(std::move(c));
}

}  // namespace

TEST(Cli, TypeaPolyPrintsSplitForm) {
  const Result r = run({"typea", "poly", "3,2,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-q^5 - 2q^6 - 3q^7"), std::string::npos);
  EXPECT_NE(r.out.find("q^5 (q-1)^3 (1 + 5q + 15q^2 + 34q^3 + 58q^4 + 62q^5 + 35q^6)"), std::string::npos);
}

TEST(Cli, TypeaPolyJsonRoundTrips) {
  const Result r = run({"typea", "poly", "3,2,1,1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(poly_from_json(j["coefficients"]), typea::kirillov_polynomial({3, 2, 1, 1}));
  EXPECT_EQ(IntPoly::parse(j["polynomial"].get<std::string>()), typea::kirillov_polynomial({3, 2, 1, 1}));
  EXPECT_EQ(j["split"]["a"], "5");
  EXPECT_EQ(j["split"]["b"], "3");
  EXPECT_EQ(poly_from_json(j["split"]["r"]), (IntPoly{1, 5, 15, 34, 58, 62, 35}));
}

TEST(Cli, G2CensusJson) {
  const Result r = run({"g2", "census", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["q"], "5");
  EXPECT_EQ(j["counts"]["7"], "10000");
  EXPECT_EQ(j["counts"]["3,3,1"], "4400");
  EXPECT_EQ(j["counts"]["3,2,2"], "1100");
  EXPECT_EQ(j["counts"]["2,2,1,1,1"], "124");
  EXPECT_EQ(j["counts"]["1,1,1,1,1,1,1"], "1");
  ASSERT_TRUE(j["cases"].is_array());
  EXPECT_EQ(j["cases"][0]["case"], 1);
  EXPECT_EQ(j["cases"][0]["rank_seq"], "6,5,4,3,2,1");
  EXPECT_EQ(j["cases"][0]["count"], "10000");
  EXPECT_FALSE(j.contains("elapsed_ms"));
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, TimingFlagAddsElapsed) {
  const Result r = run({"g2", "census", "5", "--format", "json", "--timing"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out).contains("elapsed_ms"));
}

TEST(Cli, G2CensusRejectsCharacteristicThree) {
  const Result r = run({"g2", "census", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("characteristic must exceed 3"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, OutputIsIndependentOfWorkerCount) {
  for (const std::string fmt : {"json", "csv", "table"}) {
    const Result one = run({"g2", "census", "7", "--format", fmt, "--workers", "1"});
    const Result four = run({"g2", "census", "7", "--format", fmt, "--workers", "4"});
    EXPECT_EQ(one.out, four.out) << fmt;
    const Result a = run({"typea", "census", "5", "3", "--format", fmt, "--workers", "1"});
    const Result b = run({"typea", "census", "5", "3", "--format", fmt, "--workers", "3"});
    EXPECT_EQ(a.out, b.out) << fmt;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  const Result bad_flag = run({"typea", "table4", "--bogus"});
  EXPECT_EQ(bad_flag.code, 2);
  EXPECT_NE(bad_flag.err.find("--bogus"), std::string::npos);
  EXPECT_NE(bad_flag.err.find("usage:"), std::string::npos);
  EXPECT_EQ(run({"typea", "poly", "1,2"}).code, 2);
  EXPECT_EQ(run({"typea", "table4", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"g2", "census", "6"}).code, 2);
  EXPECT_EQ(run({"g2", "interpolate", "--primes", "5,5,7"}).code, 2);
  EXPECT_EQ(run({"g2", "interpolate", "--primes", "5,7,11"}).code, 2);
  EXPECT_EQ(run({"typea", "census", "4", "3", "--workers", "0"}).code, 2);
  EXPECT_EQ(run({"poly", "split", "0"}).code, 2);
}

TEST(Cli, BudgetExceeded) {
  EXPECT_EQ(run({"g2", "census", "7", "--budget", "1000"}).code, 3);
  EXPECT_EQ(run({"typea", "census", "6", "5", "--budget", "1000"}).code, 3);
}

TEST(Cli, VerificationSubcommandsPass) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"typea", "table4"}, {"typea", "profile", "8"}, {"g2", "build"}, {"g2", "powers"}, {"g2", "springer"},
           {"typea", "census", "4", "4"}}) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << " " << args[1] << "\n" << r.err;
  }
}

TEST(Cli, PolySplitAndIrred) {
  const Result split = run({"poly", "split", "0,1,-1", "--format", "json"});
  ASSERT_EQ(split.code, 0);
  const Json s = Json::parse(split.out);
  EXPECT_EQ(s["a"], "1");
  EXPECT_EQ(s["b"], "1");
  EXPECT_EQ(poly_from_json(s["r"]), IntPoly{-1});

  const Result irred = run({"poly", "irred", "1,5,14,24,16", "--format", "json"});
  ASSERT_EQ(irred.code, 0);
  const Json v = Json::parse(irred.out);
  EXPECT_EQ(v["verdict"], "reducible");
  ASSERT_EQ(v["factors"].size(), 2U);
  EXPECT_EQ(poly_from_json(v["factors"][0]), (IntPoly{1, 2}));
  EXPECT_EQ(poly_from_json(v["factors"][1]), (IntPoly{1, 3, 8, 8}));

  EXPECT_EQ(run({"poly", "irred", "q^2 + q + 1"}).code, 0);
  EXPECT_EQ(run({"poly", "irred", "-1,0,1"}).code, 0);
}

TEST(Cli, CsvHasHeaderThenRecords) {
  const Result r = run({"g2", "census", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "partition,count");
  std::getline(in, line);
  EXPECT_EQ(line, "\"1,1,1,1,1,1,1\",1");
}

TEST(Cli, OutFlagWritesFile) {
  const std::string path = ::testing::TempDir() + "kirillov_cli_out.json";
  const Result r = run({"typea", "table4", "--format", "json", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["rows"].size(), 16U);
  std::remove(path.c_str());
}

TEST(Cli, ScanJsonRoundTrips) {
  const Result r = run({"typea", "scan", "8", "--format", "json"});
  const Json j = Json::parse(r.out);
  for (const auto& e : j["entries"]) {
    const Partition lambda = Partition::parse(e["partition"].get<std::string>());
    EXPECT_EQ(poly_from_json(e["r"]), split_qfactors(typea::kirillov_polynomial(lambda)).r);
  }
  for (const auto& e : j["reducible"]) {
    IntPoly product{1};
    for (const auto& f : e["factors"]) product = product * poly_from_json(f);
    const Partition lambda = Partition::parse(e["partition"].get<std::string>());
    EXPECT_EQ(product, split_qfactors(typea::kirillov_polynomial(lambda)).r);
  }
  EXPECT_EQ(j["reducible"].size(), 2U);  // 3,2,1 and 4,3,1
}
