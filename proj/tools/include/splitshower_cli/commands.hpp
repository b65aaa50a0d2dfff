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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace splitshower::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

struct TheoryCheckOptions {
  int grid_points = 1000;
  double z_min = 1e-3;
  double z_max = 1.0 - 1e-3;
  int samples = 50;
  std::uint64_t seed = 0;
  std::string output = "theory_check.csv";
};

struct CalibrateOptions {
  std::string input;
  std::string output = "params.csv";
};

struct ShowerOptions {
  std::string topology = "ThreeDominant";
  std::string params;
  std::uint64_t runs = 500;
  std::uint64_t shots = 1024;
  bool noisy = false;
  double depol = 0.01;
  double p01 = 0.02;
  double p10 = 0.02;
  std::string postprocess = "derived";
  std::uint64_t seed = 0;
  int bins = 20;
  std::string output = "shower.csv";
  std::string histogram = "shower_hist.csv";
  std::string plot;
};

struct JetsOptions {
  std::string input;
  std::string output = "jets.csv";
  int n_prongs = 3;
  std::string mode = "per-jet-pt";
  double jet_pt_min = 300.0;
  double abs_eta_max = 2.4;
  double constituent_pt_min = 1.0;
};

struct CompareOptions {
  std::string a;
  std::string b;
  int prong = 1;
  int bins = 20;
  std::string output = "compare.csv";
  std::string plot;
};

struct ScanOptions {
  double z_first = 0.9924;
  double z_min = 0.55;
  double z_max = 0.99;
  int points = 45;
  std::vector<double> z_prime;
  std::string output = "scan.csv";
  std::string plot;
};

/// Each command returns an exit code and reports on `log`.
int cmd_theory_check(const TheoryCheckOptions& o, std::ostream& log);
int cmd_calibrate(const CalibrateOptions& o, std::ostream& log);
int cmd_shower(const ShowerOptions& o, std::ostream& log);
int cmd_jets(const JetsOptions& o, std::ostream& log);
int cmd_compare(const CompareOptions& o, std::ostream& log);
int cmd_scan_concurrence(const ScanOptions& o, std::ostream& log);

/// Values of one prong from a shower runs CSV (frac<k>), a jets CSV
/// (prong_rank == k), a parameter CSV or a z-sample file (column z).
std::vector<double> read_prong_values(const std::string& path, int prong);

/// Full command line: parses, dispatches, maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace splitshower::cli
