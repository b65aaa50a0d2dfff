// Copyright 2026 The splitshower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "splitshower/io.hpp"
#include "splitshower/splitter.hpp"
#include "splitshower_cli/commands.hpp"

namespace fs = std::filesystem;
namespace ss = splitshower;
namespace cli = splitshower::cli;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("splitshower_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  int invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "splitshower");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

std::ifstream open(const std::string& p) { return ss::io::open_in(p); }

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}), cli::kExitUsage);
  EXPECT_EQ(invoke({"shower", "--runs", "0", "-p", path("x.csv")}), cli::kExitUsage);
  EXPECT_EQ(invoke({"shower", "--bogus"}), cli::kExitUsage);
  EXPECT_EQ(invoke({"calibrate", "-i", path("missing.txt")}), cli::kExitData);
  write("empty.jsonl", "");
  EXPECT_EQ(invoke({"jets", "-i", path("empty.jsonl"), "-o", path("j.csv")}), cli::kExitData);
  EXPECT_EQ(invoke({"--help"}), cli::kExitOk);
}

TEST_F(Cli, TheoryCheckSinglePoint) {
  ASSERT_EQ(invoke({"theory-check", "--grid-points", "1", "--samples", "5", "-o", path("t.csv")}), 0) << err_.str();
  auto in = open(path("t.csv"));
  const auto rows = ss::io::read_check_csv(in);
  EXPECT_EQ(rows.size(), 6u);
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.check;
}

TEST_F(Cli, CalibrateBoundaryAndRejection) {
  write("z.txt", "z\n1.0\n0.5\n0.8\n");
  ASSERT_EQ(invoke({"calibrate", "-i", path("z.txt"), "-o", path("p.csv")}), 0) << err_.str();
  auto in = open(path("p.csv"));
  const auto recs = ss::io::read_params_csv(in);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].z, 1.0);
  EXPECT_EQ(recs[0].params.gamma1(), 0.0);
  EXPECT_NE(err_.str() + out_.str(), "");
}

TEST_F(Cli, ScanSingleRow) {
  ASSERT_EQ(invoke({"scan-concurrence", "--z-prime", "0.7", "-o", path("s.csv")}), 0) << err_.str();
  auto in = open(path("s.csv"));
  const auto pts = ss::io::read_scan_csv(in);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].z_prime, 0.7);
}

TEST_F(Cli, ShowerMeansMatchAnalytic) {
  write("z.txt", "0.8\n");
  ASSERT_EQ(invoke({"calibrate", "-i", path("z.txt"), "-o", path("p.csv")}), 0);
  ASSERT_EQ(invoke({"shower", "-t", "TwoProng", "-p", path("p.csv"), "--runs", "200", "--shots", "1024", "-o",
                    path("r.csv"), "--histogram", path("h.csv")}),
            0)
      << err_.str();
  auto in = open(path("r.csv"));
  const auto rows = ss::io::read_runs_csv(in);
  ASSERT_EQ(rows.size(), 200u);
  double mean = 0.0;
  for (const auto& r : rows) mean += r.fractions.at(0) / 200.0;
  const double p0 = 0.9, sigma = 2 * std::sqrt(p0 * (1 - p0) / 1024) / std::sqrt(200.0);
  EXPECT_NEAR(mean, 0.8, 3 * sigma);
}

TEST_F(Cli, ShowerDeterministicAndSeeded) {
  write("z.txt", "0.7\n0.9\n0.8\n");
  ASSERT_EQ(invoke({"calibrate", "-i", path("z.txt"), "-o", path("p.csv")}), 0);
  const std::vector<std::string> base{"shower", "-p", path("p.csv"), "--runs", "20", "--noise", "--postprocess",
                                      "shifted"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
  };
  ASSERT_EQ(invoke(with({"--seed", "5", "-o", path("a.csv"), "--histogram", path("ha.csv")})), 0) << err_.str();
  ASSERT_EQ(invoke(with({"--seed", "5", "-o", path("b.csv"), "--histogram", path("hb.csv")})), 0);
  ASSERT_EQ(invoke(with({"--seed", "6", "-o", path("c.csv"), "--histogram", path("hc.csv")})), 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_NE(slurp(path("a.csv")), slurp(path("c.csv")));

  ::setenv("SPLITSHOWER_SEED", "5", 1);
  ASSERT_EQ(invoke(with({"-o", path("d.csv"), "--histogram", path("hd.csv")})), 0);
  ::unsetenv("SPLITSHOWER_SEED");
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("d.csv")));
}

TEST_F(Cli, ConfigFileSuppliesOptions) {
  write("z.txt", "0.8\n");
  ASSERT_EQ(invoke({"calibrate", "-i", path("z.txt"), "-o", path("p.csv")}), 0);
  write("run.ini", "[shower]\nruns = 7\nshots = 64\n");
  ASSERT_EQ(invoke({"--config", path("run.ini"), "shower", "-t", "TwoProng", "-p", path("p.csv"), "-o",
                    path("r.csv"), "--histogram", path("h.csv")}),
            0)
      << err_.str();
  auto in = open(path("r.csv"));
  EXPECT_EQ(ss::io::read_runs_csv(in).size(), 7u);
}
