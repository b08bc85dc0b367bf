#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli/commands.hpp"
#include "json.hpp"

namespace paving::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_m_range("6..16"), std::make_pair(6, 16));
  EXPECT_EQ(parse_m_range("8"), std::make_pair(8, 8));
  EXPECT_THROW(parse_m_range("x..3"), std::invalid_argument);
  EXPECT_THROW(parse_m_range("9..8"), std::invalid_argument);
  EXPECT_THROW(parse_m_range("1..3"), std::invalid_argument);
}

TEST(Construct, ReportsExactValues) {
  const Outcome o = invoke({"construct", "--m", "6"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["tool"], "paving");
  EXPECT_EQ(j["command"], "construct");
  EXPECT_EQ(j["dimension"], 764);
  EXPECT_EQ(j["orthonormal"], true);
  EXPECT_EQ(j["delta_p"], "2/49");
  EXPECT_EQ(j["row_norm_sq"]["a"]["exact"], "187/9072");
  EXPECT_EQ(j["b_block_dominates"], true);
}

TEST(Certify, FalsifyingRangeExitsZero) {
  const Outcome o = invoke({"certify", "--m", "6..9"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["first_falsifying_m"], 8);
  ASSERT_EQ(j["reports"].size(), 4u);
  EXPECT_EQ(j["reports"][0]["verdict"], "INCONCLUSIVE");
  EXPECT_EQ(j["reports"][2]["min_norm_sq"], "2/729");
  EXPECT_EQ(j["reports"][2]["two_delta_p_sq"], "16/6561");
  EXPECT_EQ(j["reports"][2]["verdict"], "FALSIFIES_A");
}

TEST(Certify, InconclusiveRangeExitsThree) {
  const Outcome o = invoke({"certify", "--m", "6..7"});
  EXPECT_EQ(o.code, kInconclusive);
  EXPECT_EQ(nlohmann::json::parse(o.out)["any_falsifies"], false);
}

TEST(Certify, CsvHasOneRowPerM) {
  const Outcome o = invoke({"certify", "--m", "8..12", "--format", "csv"});
  ASSERT_EQ(o.code, kSuccess);
  EXPECT_EQ(line_count(o.out), 2u + 5u);
  EXPECT_EQ(o.out.rfind("# {", 0), 0u);
}

TEST(UsageErrors, ExitOne) {
  EXPECT_EQ(invoke({"construct", "--m", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"certify", "--m", "abc"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"scan", "--n", "4", "--rank", "5", "--count", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"scan", "--n", "4", "--rank", "2", "--count", "1", "--mode", "bogus"}).code, kUsageError);
}

TEST(UsageErrors, CapExceededNamesTheFlag) {
  const Outcome o = invoke({"bruteforce", "--n", "30", "--rank", "10"});
  EXPECT_EQ(o.code, kUsageError);
  EXPECT_NE(o.err.find("--max-n"), std::string::npos);
}

TEST(HelpAndVersion, ExitZero) {
  EXPECT_EQ(invoke({"--help"}).code, kSuccess);
  const Outcome v = invoke({"--version"});
  EXPECT_EQ(v.code, kSuccess);
}

TEST(Bruteforce, RecordFields) {
  const Outcome o = invoke({"bruteforce", "--n", "8", "--rank", "4", "--seed", "3", "--gamma", "0.9", "--epsilon",
                            "0.01", "--no-timing"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["record"]["seed"], 3);
  EXPECT_TRUE(j["record"]["min_psp_norm"].is_number());
  EXPECT_FALSE(j["record"].contains("runtime_ms"));
}

TEST(Theorem1, WithinBound) {
  const Outcome o = invoke({"theorem1", "--n", "12", "--rank", "5", "--seed", "4"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["result"]["within_bound"], true);
  EXPECT_EQ(j["result"]["signs"].size(), 12u);
}

TEST(Scan, JsonLinesAndCsv) {
  const Outcome json = invoke({"scan", "--n", "6", "--rank", "3", "--count", "4", "--seed", "10"});
  ASSERT_EQ(json.code, kSuccess) << json.err;
  EXPECT_EQ(line_count(json.out), 1u + 4u);
  const Outcome csv = invoke({"scan", "--n", "6", "--rank", "3", "--count", "4", "--format", "csv"});
  ASSERT_EQ(csv.code, kSuccess);
  EXPECT_EQ(line_count(csv.out), 2u + 4u);
}

TEST(Determinism, ByteIdenticalAcrossRunsAndWorkers) {
  const std::vector<std::string> base{"scan", "--n", "9", "--rank", "4", "--count", "5", "--seed", "77",
                                      "--mode", "full", "--no-timing"};
  auto with_workers = [&](const char* w) {
    auto a = base;
    a.insert(a.end(), {"--workers", w});
    return invoke(a).out;
  };
  const std::string first = with_workers("1");
  EXPECT_EQ(first, with_workers("1"));
  EXPECT_EQ(first, with_workers("4"));
  EXPECT_EQ(invoke({"certify", "--m", "6..10", "--workers", "1"}).out,
            invoke({"certify", "--m", "6..10", "--workers", "4"}).out);
}

TEST(Output, WritesFile) {
  const std::string path = ::testing::TempDir() + "paving_cli_out.json";
  const Outcome o = invoke({"certify", "--m", "8", "--output", path});
  ASSERT_EQ(o.code, kSuccess);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["reports"][0]["m"], 8);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace paving::cli
