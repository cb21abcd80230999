#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "app.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::vector<const char*> argv = {"rothkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = rothkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, R3Report) {
  const Result r = run({"r3", "--n", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "r3");
  EXPECT_EQ(j["result"]["value"], 6);
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(j.contains("constants"));
  EXPECT_EQ(j["tool"]["name"], "rothkit");
}

TEST(Cli, CsvOutput) {
  const Result r = run({"r3", "--n", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,value,agree,witness\n5,4,true,1 2 4 5\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"r3", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"r3", "--n", "100"}).code, 2);
  EXPECT_EQ(run({"iterate", "--group", "0"}).code, 2);
  EXPECT_EQ(run({"iterate", "--set", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"r3", "--constants", "{\"no_such_constant\": 1}"}).code, 2);
  EXPECT_EQ(run({"r3", "--format", "xml"}).code, 2);
}

TEST(Cli, CheckFailureExitsOne) {
  // a sample length of one cannot meet an epsilon of 0.1
  const Result r = run({"ap-experiment", "--group", "101", "--mode", "moment", "--epsilon", "0.1", "--trials", "20",
                        "--constants", "{\"sample_constant\": 0.0001}"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["pass"], false);
}

TEST(Cli, IterateCapSetPasses) {
  const Result r = run({"iterate", "--group", "3x3x3x3", "--set", "product:4", "--seed", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["trace"]["all_verified"], true);
  EXPECT_EQ(j["result"]["set"]["size"], 16);
}

TEST(Cli, ConfigFileOverriddenByFlags) {
  const std::string cfg = write_temp("rothkit_cfg.json", "{\"n\": 9, \"seed\": 17}");
  const Result from_file = run({"r3", "--config", cfg});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  auto j = nlohmann::json::parse(from_file.out);
  EXPECT_EQ(j["config"]["n"], 9);
  EXPECT_EQ(j["config"]["seed"], 17);
  const Result flagged = run({"r3", "--config", cfg, "--n", "7"});
  j = nlohmann::json::parse(flagged.out);
  EXPECT_EQ(j["config"]["n"], 7);
  EXPECT_EQ(j["config"]["seed"], 17);
  EXPECT_EQ(j["result"]["value"], 4);

  const std::string bad = write_temp("rothkit_bad.json", "{\"n\": \"nine\"}");
  EXPECT_EQ(run({"r3", "--config", bad}).code, 2);
  const std::string unknown = write_temp("rothkit_unknown.json", "{\"radius\": 3}");
  EXPECT_EQ(run({"r3", "--config", unknown}).code, 2);
  std::remove(cfg.c_str());
  std::remove(bad.c_str());
  std::remove(unknown.c_str());
}

TEST(Cli, ConstantsFromFile) {
  const std::string path = write_temp("rothkit_constants.json", "{\"c_narrow\": \"1/200\"}");
  const Result r = run({"iterate", "--group", "101", "--constants", "@" + path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["constants"]["c_narrow"], "1/200");
  std::remove(path.c_str());
}

TEST(Cli, ReportsAreReproducible) {
  const std::vector<std::vector<std::string>> commands = {
      {"iterate", "--group", "211", "--density", "0.3", "--seed", "5"},
      {"iterate", "--group", "211", "--density", "0.3", "--seed", "5", "--jsonl"},
      {"ap-experiment", "--group", "3x3x3x3", "--mode", "set", "--seed", "8"},
      {"verify", "--suite", "r3"},
  };
  for (const auto& c : commands) {
    const Result a = run(c), b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << c[0];
  }
  EXPECT_NE(run({"iterate", "--group", "211", "--density", "0.3", "--seed", "5"}).out,
            run({"iterate", "--group", "211", "--density", "0.3", "--seed", "6"}).out);
}

TEST(Cli, SetFileSource) {
  const std::string path = write_temp("rothkit_set.txt", "integers 10\n1\n2\n4\n5\n10\n");
  const Result r = run({"iterate", "--set", "file:" + path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["trace"]["group"], "21");
  EXPECT_EQ(j["result"]["set"]["size"], 5);
  std::remove(path.c_str());
}

TEST(Cli, WritesToOutFile) {
  const std::string path = testing::TempDir() + "rothkit_out.json";
  const Result r = run({"r3", "--n", "6", "--out", path});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(text.str())["result"]["value"], 4);
  std::remove(path.c_str());
}

TEST(Cli, VerifyMomentsSuite) {
  const Result r = run({"verify", "--suite", "moments"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j["result"]["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c["id"];
}
