#include <gtest/gtest.h>

#include <sstream>

#include "wbptree/cli.hpp"

namespace {

using namespace wbp;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "wbptree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CountPq) {
  const CliResult r = run({"count", "--pq", "10,6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["total"], "11");
  EXPECT_EQ(j["by_symmetry"], Json::parse(R"({"1":"8","3":"2","5":"1"})"));
  EXPECT_EQ(j["G"]["1"], "133/15");
  EXPECT_EQ(j["closed_form"]["agrees"], true);
}

TEST(Cli, CountPassportKeyOrder) {
  const CliResult r = run({"count", "--passport", "2^2 4^3 | 8^2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"passport", "G", "total", "by_symmetry"}));
  EXPECT_EQ(j["total"], "3");
}

TEST(Cli, CountText) {
  const CliResult r = run({"--format", "text", "count", "--passport", "1^3 | 3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total: 1"), std::string::npos);
  EXPECT_NE(r.out.find("3:1"), std::string::npos);
}

TEST(Cli, Enumerate) {
  const CliResult r = run({"enumerate", "--passport", "1^3 | 3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["trees"].size(), 1u);
  EXPECT_EQ(j["trees"][0]["aut_order"], 3);
  EXPECT_EQ(j["trees"][0]["vertices"].size(), 4u);

  const CliResult dot = run({"enumerate", "--passport", "3^7 | 7^3", "--format", "dot"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("graph tree0"), std::string::npos);
  EXPECT_NE(dot.out.find("graph tree1"), std::string::npos);
  EXPECT_NE(dot.out.find("fillcolor=black"), std::string::npos);
}

TEST(Cli, EnumerateBound) {
  EXPECT_EQ(run({"enumerate", "--passport", "6^10 | 10^6", "--max-weight", "15"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--passport", "6^10 | 10^6"}).code, 0);
}

TEST(Cli, Census) {
  const CliResult r = run({"census", "--alpha", "9"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 4u);
  const CliResult t = run({"census", "--alpha", "9", "--format", "text"});
  EXPECT_NE(t.out.find("saddle_total"), std::string::npos);
  EXPECT_EQ(run({"census", "--alpha", "2"}).code, 2);
}

TEST(Cli, Verify) {
  const CliResult r = run({"verify", "--max-weight", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["ok"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"count"}).code, 2);
  EXPECT_EQ(run({"count", "--pq", "10"}).code, 2);
  EXPECT_EQ(run({"count", "--pq", "3,5"}).code, 2);
  EXPECT_EQ(run({"count", "--passport", "2 | 3"}).code, 2);
  EXPECT_EQ(run({"count", "--passport", "2^0 | 2"}).code, 2);
  EXPECT_EQ(run({"count", "--passport", "1 | 1", "--pq", "3,1"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "census", "--alpha", "5"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
