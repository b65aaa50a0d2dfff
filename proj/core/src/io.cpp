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

#include "splitshower/io.hpp"

#include <charconv>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "splitshower/error.hpp"

namespace splitshower::io {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, std::size_t line) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    // from_chars rejects "inf"/"nan" spellings that strtod accepts; neither is valid data here.
    throw Error(ErrorCode::Parse, fmt::format("line {}: '{}' is not a number", line, s));
  }
  return v;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::Parse, fmt::format("line {}: '{}' is not a nonnegative integer", line, s));
  }
  return v;
}

// Rows of a CSV whose first line must equal `header` (a prefix match when
// `prefix` is set).
class CsvReader {
 public:
  CsvReader(std::istream& in, const std::string& header, bool prefix = false) : in_(in) {
    std::string first;
    if (!std::getline(in_, first)) throw Error(ErrorCode::Parse, "empty file, expected a header");
    first = trim(first);
    line_ = 1;
    if (prefix ? first.rfind(header, 0) != 0 : first != header) {
      throw Error(ErrorCode::Parse, fmt::format("header '{}' does not match '{}'", first, header));
    }
    columns_ = split(first).size();
  }

  bool next(std::vector<std::string>& cells) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      line = trim(line);
      if (line.empty()) continue;
      cells = split(line);
      return true;
    }
    return false;
  }

  void expect(const std::vector<std::string>& cells, std::size_t n) const {
    if (cells.size() != n) {
      throw Error(ErrorCode::Parse, fmt::format("line {}: {} fields, expected {}", line_, cells.size(), n));
    }
  }

  std::size_t line() const { return line_; }
  std::size_t columns() const { return columns_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::size_t columns_ = 0;
};

}  // namespace

std::string format_double(double x) { return fmt::format("{}", x); }

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Io, fmt::format("cannot open '{}' for reading", path));
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::Io, fmt::format("cannot open '{}' for writing", path));
  return f;
}

std::vector<double> read_z_samples(std::istream& in) {
  std::vector<double> zs;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (zs.empty() && line == "z") continue;
    zs.push_back(parse_double(line, n));
  }
  if (zs.empty()) throw Error(ErrorCode::EmptyDataset, "no z values in input");
  return zs;
}

void write_z_samples(std::ostream& out, std::span<const double> zs) {
  out << "z\n";
  for (double z : zs) out << format_double(z) << '\n';
}

void write_params_csv(std::ostream& out, std::span<const calibrate::CalibrationRecord> records) {
  out << "z,gamma1,gamma2,gamma3,residual_z,residual_c\n";
  for (const auto& r : records) {
    out << fmt::format("{},{},{},{},{},{}\n", format_double(r.z), format_double(r.params.gamma1()),
                       format_double(r.params.gamma2()), format_double(r.params.gamma3()),
                       format_double(r.residual_z), format_double(r.residual_c));
  }
}

std::vector<calibrate::CalibrationRecord> read_params_csv(std::istream& in) {
  CsvReader csv(in, "z,gamma1,gamma2,gamma3,residual_z,residual_c");
  std::vector<calibrate::CalibrationRecord> out;
  std::vector<std::string> c;
  while (csv.next(c)) {
    csv.expect(c, 6);
    const auto ln = csv.line();
    try {
      splitter::SplittingParams p(parse_double(c[1], ln), parse_double(c[2], ln), parse_double(c[3], ln));
      out.push_back({parse_double(c[0], ln), p, parse_double(c[4], ln), parse_double(c[5], ln)});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse) throw;
      throw Error(ErrorCode::Parse, fmt::format("line {}: {}", ln, e.what()));
    }
  }
  return out;
}

void write_runs_csv(std::ostream& out, std::span<const RunRow> rows, int n_prongs) {
  out << "run_id,accepted";
  for (int k = 1; k <= n_prongs; ++k) out << ",frac" << k;
  out << '\n';
  for (const auto& r : rows) {
    out << r.run_id << ',' << (r.accepted ? 1 : 0);
    for (int k = 0; k < n_prongs; ++k) {
      out << ',';
      if (r.accepted) out << format_double(r.fractions.at(static_cast<std::size_t>(k)));
    }
    out << '\n';
  }
}

std::vector<RunRow> read_runs_csv(std::istream& in) {
  CsvReader csv(in, "run_id,accepted,frac1", true);
  const std::size_t width = csv.columns();
  std::vector<RunRow> out;
  std::vector<std::string> c;
  while (csv.next(c)) {
    csv.expect(c, width);
    RunRow r;
    r.run_id = parse_uint(c[0], csv.line());
    r.accepted = parse_uint(c[1], csv.line()) != 0;
    if (r.accepted)
      for (std::size_t k = 2; k < width; ++k) r.fractions.push_back(parse_double(c[k], csv.line()));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<HistogramRow> histogram_rows(std::span<const stats::Histogram> per_prong) {
  std::vector<HistogramRow> rows;
  for (std::size_t p = 0; p < per_prong.size(); ++p) {
    const auto& h = per_prong[p];
    const auto d = h.densities();
    for (std::size_t i = 0; i < h.bins(); ++i)
      rows.push_back({static_cast<int>(p) + 1, h.edges()[i], h.edges()[i + 1], h.counts()[i], d[i]});
  }
  return rows;
}

void write_histogram_csv(std::ostream& out, std::span<const HistogramRow> rows) {
  out << "prong,bin_lo,bin_hi,count,density\n";
  for (const auto& r : rows) {
    out << fmt::format("{},{},{},{},{}\n", r.prong, format_double(r.bin_lo), format_double(r.bin_hi), r.count,
                       format_double(r.density));
  }
}

std::vector<HistogramRow> read_histogram_csv(std::istream& in) {
  CsvReader csv(in, "prong,bin_lo,bin_hi,count,density");
  std::vector<HistogramRow> out;
  std::vector<std::string> c;
  while (csv.next(c)) {
    csv.expect(c, 5);
    const auto ln = csv.line();
    out.push_back({static_cast<int>(parse_uint(c[0], ln)), parse_double(c[1], ln), parse_double(c[2], ln),
                   parse_uint(c[3], ln), parse_double(c[4], ln)});
  }
  return out;
}

void write_jets_csv(std::ostream& out, std::span<const JetRow> rows) {
  out << "event_id,prong_rank,fraction\n";
  for (const auto& r : rows) out << fmt::format("{},{},{}\n", r.event_id, r.prong_rank, format_double(r.fraction));
}

std::vector<JetRow> read_jets_csv(std::istream& in) {
  CsvReader csv(in, "event_id,prong_rank,fraction");
  std::vector<JetRow> out;
  std::vector<std::string> c;
  while (csv.next(c)) {
    csv.expect(c, 3);
    const auto ln = csv.line();
    out.push_back({parse_uint(c[0], ln), static_cast<int>(parse_uint(c[1], ln)), parse_double(c[2], ln)});
  }
  return out;
}

void write_scan_csv(std::ostream& out, std::span<const splitter::ScanPoint> points) {
  out << "z_prime,c_circuit,c_qcd,rel_deviation\n";
  for (const auto& p : points) {
    out << fmt::format("{},{},{},{}\n", format_double(p.z_prime), format_double(p.concurrence),
                       format_double(p.c_qcd), format_double(p.relative_deviation));
  }
}

std::vector<splitter::ScanPoint> read_scan_csv(std::istream& in) {
  CsvReader csv(in, "z_prime,c_circuit,c_qcd,rel_deviation");
  std::vector<splitter::ScanPoint> out;
  std::vector<std::string> c;
  while (csv.next(c)) {
    csv.expect(c, 4);
    const auto ln = csv.line();
    out.push_back({parse_double(c[0], ln), parse_double(c[1], ln), parse_double(c[2], ln), parse_double(c[3], ln)});
  }
  return out;
}

void write_check_csv(std::ostream& out, std::span<const CheckRow> rows) {
  out << "check,status,max_abs_error,tolerance\n";
  for (const auto& r : rows) {
    out << fmt::format("{},{},{},{}\n", r.check, r.pass ? "pass" : "fail", format_double(r.max_abs_error),
                       format_double(r.tolerance));
  }
}

std::vector<CheckRow> read_check_csv(std::istream& in) {
  CsvReader csv(in, "check,status,max_abs_error,tolerance");
  std::vector<CheckRow> out;
  std::vector<std::string> c;
  while (csv.next(c)) {
    csv.expect(c, 4);
    const auto ln = csv.line();
    if (c[1] != "pass" && c[1] != "fail") {
      throw Error(ErrorCode::Parse, fmt::format("line {}: status '{}'", ln, c[1]));
    }
    out.push_back({c[0], c[1] == "pass", parse_double(c[2], ln), parse_double(c[3], ln)});
  }
  return out;
}

void write_compare_csv(std::ostream& out, const stats::CompareReport& r) {
  out << "ks,chi2,n_bins,samples_a,samples_b\n";
  out << fmt::format("{},{},{},{},{}\n", format_double(r.ks_statistic), format_double(r.chi2), r.n_bins,
                     r.samples_a, r.samples_b);
}

stats::CompareReport read_compare_csv(std::istream& in) {
  CsvReader csv(in, "ks,chi2,n_bins,samples_a,samples_b");
  std::vector<std::string> c;
  if (!csv.next(c)) throw Error(ErrorCode::Parse, "compare report has no data row");
  csv.expect(c, 5);
  const auto ln = csv.line();
  return {parse_double(c[0], ln), parse_double(c[1], ln), static_cast<int>(parse_uint(c[2], ln)),
          parse_uint(c[3], ln), parse_uint(c[4], ln)};
}

std::vector<std::vector<jets::PseudoJet>> read_constituents_jsonl(std::istream& in) {
  std::vector<std::vector<jets::PseudoJet>> events;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    std::vector<jets::PseudoJet> ev;
    try {
      const auto j = nlohmann::json::parse(line);
      for (const auto& c : j.at("constituents")) {
        if (!c.is_array() || c.size() != 4) throw Error(ErrorCode::Parse, "constituent must be [px,py,pz,E]");
        ev.emplace_back(c[0].get<double>(), c[1].get<double>(), c[2].get<double>(), c[3].get<double>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, fmt::format("line {}: {}", n, e.what()));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, fmt::format("line {}: {}", n, e.what()));
    }
    events.push_back(std::move(ev));
  }
  return events;
}

void write_constituents_jsonl(std::ostream& out, std::span<const std::vector<jets::PseudoJet>> events) {
  for (const auto& ev : events) {
    out << "{\"constituents\": [";
    for (std::size_t i = 0; i < ev.size(); ++i) {
      const auto& p = ev[i];
      out << (i ? ", " : "") << '[' << format_double(p.px()) << ", " << format_double(p.py()) << ", "
          << format_double(p.pz()) << ", " << format_double(p.e()) << ']';
    }
    out << "]}\n";
  }
}

std::vector<double> read_column(std::istream& in, const std::string& column) {
  std::string header;
  if (!std::getline(in, header)) throw Error(ErrorCode::Parse, "empty file");
  const auto names = split(trim(header));
  std::size_t idx = names.size();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == column) idx = i;
  if (idx == names.size()) throw Error(ErrorCode::Parse, fmt::format("no column '{}'", column));
  std::vector<double> out;
  std::string line;
  std::size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    line = trim(line);
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != names.size()) {
      throw Error(ErrorCode::Parse, fmt::format("line {}: {} fields, expected {}", n, cells.size(), names.size()));
    }
    if (!cells[idx].empty()) out.push_back(parse_double(cells[idx], n));
  }
  return out;
}

}  // namespace splitshower::io
