#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = halfperm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TablesCheckPasses) {
  for (const char* t : {"pi-inverse", "gamma-inverse", "gamma-tilde-inverse"}) {
    const Result r = run({"tables", t, "--rows", "5", "--check"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
  }
}

TEST(Cli, TablesJsonCarriesRows) {
  const Result r = run({"tables", "pi-inverse", "--rows", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"][2][1], "1 + 2*c");
}

TEST(Cli, EnumerateExamples) {
  Result r = run({"enumerate", "ncc", "--n", "2", "--k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4 diagrams, weight (closed blocks) 2 + 2*c"), std::string::npos) << r.out;
  r = run({"enumerate", "snc", "--m", "1", "--n", "1"});
  EXPECT_NE(r.out.find("1 diagram, weight (all blocks) c"), std::string::npos) << r.out;
  r = run({"enumerate", "ncl", "--n", "2", "--k", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["weight"], "1 + 2*c");
  EXPECT_EQ(j["count"], 3);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"tables"}).code, 2);
  EXPECT_EQ(run({"tables", "delta"}).code, 2);
  EXPECT_EQ(run({"enumerate", "ncc", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"mc", "diagonalize", "--mixed", "1,1:1,1", "--N", "4", "--samples", "4"}).code, 2);
  const Result r = run({"enumerate", "nc", "--n", "20"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--cap"), std::string::npos);
}

TEST(Cli, VerifyReportsEveryInstance) {
  const Result r = run({"verify", "series", "--order", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["count"].get<size_t>(), j["checks"].size());
  EXPECT_EQ(run({"verify", "wick", "--depth", "4"}).code, 0);
}

TEST(Cli, McTextAndJsonAgree) {
  const std::vector<std::string> base{"mc", "raw-cov", "--m", "1", "--n", "2", "--N", "12", "--c", "2", "--samples", "300", "--seed", "5"};
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const Result j = run(json_args);
  const Result t = run(base);
  const auto doc = nlohmann::json::parse(j.out);
  const std::string estimate = doc["covariance"][0]["estimate"].dump();
  EXPECT_NE(t.out.find(estimate), std::string::npos) << estimate << "\n" << t.out;
  EXPECT_EQ(doc["config"]["M"], 24);
  EXPECT_EQ(doc["covariance"][0]["predicted_poly"], "2*c + 2*c^2");
}

TEST(Cli, OutIsWrittenAtomically) {
  const auto dir = std::filesystem::temp_directory_path() / "halfperm_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "table.csv";
  const Result r = run({"tables", "gamma", "--rows", "3", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "n,k0,k1,k2");
  size_t leftovers = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) leftovers += e.path().string().find(".tmp.") != std::string::npos;
  EXPECT_EQ(leftovers, 0u);
  std::filesystem::remove_all(dir);
}
