// Copyright 2026 The secgap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "secgap/cli.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace secgap::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> Cells(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("secgap-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    ::unsetenv("SECGAP_SEED");
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SimulateWritesOneRow) {
  const Result r = Call({"simulate", "--family", "exp", "--n", "20", "--iters",
                         "200", "--k", "5", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], kCsvHeader);
  const auto cells = Cells(lines[1]);
  ASSERT_EQ(cells.size(), 15u);
  EXPECT_EQ(cells[0], "exp");
  EXPECT_EQ(cells[1], "exact-gap");
  EXPECT_EQ(cells[4], "5");
  EXPECT_EQ(cells[5], "0.2");
  EXPECT_EQ(cells[10], "3");
}

TEST_F(CliTest, ParetoExactGapNearPointEight) {
  const Result r = Call({"simulate", "--family", "pareto", "--n", "200",
                         "--iters", "5000", "--algo", "exact-gap", "--tau",
                         "0.2", "--k", "50", "--sigma", "1", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const double mean = std::stod(Cells(Lines(r.out)[1])[11]);
  EXPECT_NEAR(mean, 0.80, 0.03);
}

TEST_F(CliTest, ValidationFailuresExitTwo) {
  Result r = Call({"simulate", "--algo", "exact-gap", "--tau", "1.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("tau must lie in [0,1)"), std::string::npos) << r.err;
  r = Call({"sweep", "--sweep", "sigma", "--step", "0", "--n", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("step must be > 0"), std::string::npos) << r.err;
  EXPECT_EQ(Call({"simulate", "--family", "normal"}).code, 2);
  EXPECT_EQ(Call({"simulate", "--bogus"}).code, 2);
  EXPECT_EQ(Call({"simulate", "--n", "ten"}).code, 2);
  EXPECT_EQ(Call({"simulate", "--n", "10", "--k", "11"}).code, 2);
  EXPECT_EQ(Call({"bounds", "--which", "rc", "--tau", "0.5", "--gamma", "0.9"})
                .code,
            2);
  EXPECT_EQ(Call({}).code, 2);
}

TEST_F(CliTest, RepeatedRunsAreIdentical) {
  const std::vector<std::string> args = {"simulate", "--family", "pareto",
                                         "--n",      "50",       "--iters",
                                         "1500",     "--seed",   "11"};
  EXPECT_EQ(Call(args).out, Call(args).out);
}

TEST_F(CliTest, SeedFromEnvironment) {
  ::setenv("SECGAP_SEED", "42", 1);
  const Result r =
      Call({"simulate", "--family", "exp", "--n", "10", "--iters", "10"});
  ::unsetenv("SECGAP_SEED");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Cells(Lines(r.out)[1])[10], "42");
  ::setenv("SECGAP_SEED", "x", 1);
  EXPECT_EQ(Call({"simulate", "--n", "10"}).code, 2);
  ::unsetenv("SECGAP_SEED");
}

TEST_F(CliTest, KSweepIncludesClassicalBaseline) {
  const Result r =
      Call({"sweep", "--sweep", "k", "--family", "exp", "--n", "20", "--iters",
            "100", "--from", "2", "--to", "20", "--step", "9", "--algo",
            "exact-gap,robust"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 1u + 3 * 3);
  EXPECT_EQ(Cells(lines[3])[1], "classical");
  EXPECT_EQ(Cells(lines[3])[5], "0.3678794412");
  EXPECT_EQ(Cells(lines[4])[4], "11");
}

TEST_F(CliTest, SigmaSweepGrid) {
  const Result r = Call({"sweep", "--sweep", "sigma", "--family", "exp", "--n",
                         "20", "--iters", "100", "--k", "2,20", "--from", "0",
                         "--to", "0.3", "--step", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 1u + 2 * 4);
  EXPECT_EQ(Cells(lines[4])[7], "0.3");
}

TEST_F(CliTest, BoundsReports) {
  Result r = Call({"bounds", "--which", "rc", "--tau", "0.2", "--gamma", "0.6"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["consistency"].get<double>(), 0.383, 0.001);
  EXPECT_NEAR(j["robustness"].get<double>(), 0.1833, 0.0005);
  EXPECT_TRUE(j["components"].contains("alpha1"));

  r = Call({"bounds", "--which", "exact", "--tau", "0.2", "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["alpha"].get<double>(), 0.40283, 1e-5);
  EXPECT_EQ(j["binding_term"], "case2_ii");

  r = Call({"bounds", "--which", "tie23", "--tau", "0.359"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["probability"].get<double>(),
              0.4415, 1e-4);

  r = Call({"bounds", "--which", "lselect", "--L", "2", "--beta", "0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["bound"].get<double>(),
              0.3992044293868903, 1e-12);

  r = Call({"bounds", "--which", "bounded", "--tau", "0.2", "--k", "2",
            "--epsilon", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["lower_bound"].get<double>(), j["alpha"].get<double>() - 0.2,
              1e-12);
}

TEST_F(CliTest, FrontierRows) {
  const Result r = Call({"frontier", "--r-from", "0.1833", "--r-to", "0.4",
                         "--r-step", "0.2", "--grid-step", "0.005"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  const auto feasible = Cells(lines[1]);
  EXPECT_EQ(feasible[1], "1");
  EXPECT_GE(std::stod(feasible[4]), 0.383);
  EXPECT_EQ(Cells(lines[2])[1], "0");
  EXPECT_EQ(Call({"frontier", "--grid-step", "0"}).code, 2);
  EXPECT_EQ(Call({"frontier", "--r-from", "0.3", "--r-to", "0.1"}).code, 2);
}

TEST_F(CliTest, ManifestReplayIsByteIdentical) {
  const std::string out = Path("run.csv");
  ::setenv("SECGAP_SEED", "99", 1);
  const Result r = Call({"sweep", "--sweep", "sigma", "--family", "exp", "--n",
                         "30", "--iters", "300", "--k", "5", "--to", "1",
                         "--step", "0.5", "--out", out});
  ::unsetenv("SECGAP_SEED");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto manifest =
      nlohmann::json::parse(Slurp(out + ".manifest.json"));
  EXPECT_EQ(manifest["command"], "sweep");
  EXPECT_EQ(manifest["master_seed"], 99);
  EXPECT_EQ(manifest["version"], kVersion);
  EXPECT_EQ(manifest["csv_schema"], kCsvSchema);
  EXPECT_EQ(manifest["output"], out);

  const std::string again = Path("again.csv");
  const Result re = Call({"replay", "--manifest", out + ".manifest.json",
                          "--out", again});
  ASSERT_EQ(re.code, 0) << re.err;
  EXPECT_EQ(Slurp(out), Slurp(again));
  EXPECT_FALSE(Slurp(out).empty());
}

TEST_F(CliTest, GeneratedInstancesReplay) {
  const std::string inst = Path("inst.txt");
  ASSERT_EQ(Call({"generate", "--family", "chisq", "--n", "12", "--count", "3",
                  "--seed", "5", "--out", inst})
                .code,
            0);
  const auto lines = Lines(Slurp(inst));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "# secgap-profiles family=chisq seed=5");
  const Result r = Call({"simulate", "--instances", inst, "--iters", "300",
                         "--k", "12", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto cells = Cells(Lines(r.out)[1]);
  EXPECT_EQ(cells[0], "chisq");
  EXPECT_EQ(cells[2], "12");
}

TEST_F(CliTest, LSelectColumns) {
  const Result r = Call({"simulate", "--family", "exp", "--n", "30", "--iters",
                         "200", "--algo", "l-select", "--L", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto cells = Cells(Lines(r.out)[1]);
  EXPECT_EQ(cells[4], "");
  EXPECT_EQ(cells[9], "3");
  EXPECT_EQ(Call({"simulate", "--n", "3", "--algo", "l-select", "--L", "3"})
                .code,
            2);
}

TEST_F(CliTest, VerifyBoundsSuite) {
  const Result r = Call({"verify", "--suite", "bounds"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS C1"), std::string::npos);
  EXPECT_EQ(Call({"verify", "--suite", "nope"}).code, 2);
}

}  // namespace
}  // namespace secgap::cli
