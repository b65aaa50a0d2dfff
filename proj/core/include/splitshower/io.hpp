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
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "splitshower/calibrate.hpp"
#include "splitshower/jets.hpp"
#include "splitshower/splitter.hpp"
#include "splitshower/stats.hpp"

namespace splitshower::io {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

/// Throws Io.
std::ifstream open_in(const std::string& path);
std::ofstream open_out(const std::string& path);

/// One value per line; blank lines and '#' comments are skipped and an
/// optional first line "z" is treated as a header. Throws Parse, EmptyDataset.
std::vector<double> read_z_samples(std::istream& in);
void write_z_samples(std::ostream& out, std::span<const double> zs);

/// z,gamma1,gamma2,gamma3,residual_z,residual_c
void write_params_csv(std::ostream& out, std::span<const calibrate::CalibrationRecord> records);
std::vector<calibrate::CalibrationRecord> read_params_csv(std::istream& in);

struct RunRow {
  std::uint64_t run_id = 0;
  bool accepted = false;
  std::vector<double> fractions;  // empty when rejected

  bool operator==(const RunRow&) const = default;
};

/// run_id,accepted,frac1,...,fracN with empty fraction cells for rejected runs.
void write_runs_csv(std::ostream& out, std::span<const RunRow> rows, int n_prongs);
std::vector<RunRow> read_runs_csv(std::istream& in);

struct HistogramRow {
  int prong = 0;
  double bin_lo = 0.0;
  double bin_hi = 0.0;
  std::uint64_t count = 0;
  double density = 0.0;

  bool operator==(const HistogramRow&) const = default;
};

std::vector<HistogramRow> histogram_rows(std::span<const stats::Histogram> per_prong);
/// prong,bin_lo,bin_hi,count,density
void write_histogram_csv(std::ostream& out, std::span<const HistogramRow> rows);
std::vector<HistogramRow> read_histogram_csv(std::istream& in);

struct JetRow {
  std::uint64_t event_id = 0;
  int prong_rank = 0;
  double fraction = 0.0;

  bool operator==(const JetRow&) const = default;
};

/// event_id,prong_rank,fraction
void write_jets_csv(std::ostream& out, std::span<const JetRow> rows);
std::vector<JetRow> read_jets_csv(std::istream& in);

/// z_prime,c_circuit,c_qcd,rel_deviation
void write_scan_csv(std::ostream& out, std::span<const splitter::ScanPoint> points);
std::vector<splitter::ScanPoint> read_scan_csv(std::istream& in);

struct CheckRow {
  std::string check;
  bool pass = false;
  double max_abs_error = 0.0;
  double tolerance = 0.0;

  bool operator==(const CheckRow&) const = default;
};

/// check,status,max_abs_error,tolerance
void write_check_csv(std::ostream& out, std::span<const CheckRow> rows);
std::vector<CheckRow> read_check_csv(std::istream& in);

/// ks,chi2,n_bins,samples_a,samples_b
void write_compare_csv(std::ostream& out, const stats::CompareReport& report);
stats::CompareReport read_compare_csv(std::istream& in);

/// One event per line: {"constituents": [[px, py, pz, E], ...]}. Blank lines
/// are skipped. Throws Parse with the line number.
std::vector<std::vector<jets::PseudoJet>> read_constituents_jsonl(std::istream& in);
void write_constituents_jsonl(std::ostream& out, std::span<const std::vector<jets::PseudoJet>> events);

/// Values of one column (by header name) from any of the CSVs above.
/// Empty cells are skipped. Throws Parse.
std::vector<double> read_column(std::istream& in, const std::string& column);

}  // namespace splitshower::io
