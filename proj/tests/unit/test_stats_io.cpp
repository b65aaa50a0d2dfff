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

#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "splitshower/calibrate.hpp"
#include "splitshower/io.hpp"
#include "splitshower/jets.hpp"
#include "splitshower/rng.hpp"
#include "splitshower/stats.hpp"
#include "support/expect.hpp"

namespace ss = splitshower;
using namespace splitshower::stats;
using splitshower::testing::expect_code;

namespace {

std::vector<double> uniforms(std::size_t n, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
  ss::Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = lo + (hi - lo) * rng.uniform01();
  return v;
}

}  // namespace

TEST(Histogram, DensitiesIntegrateToOne) {
  auto h = Histogram::uniform(20);
  h.fill(uniforms(5000, 1));
  double integral = 0.0;
  const auto d = h.densities();
  for (std::size_t i = 0; i < h.bins(); ++i) integral += d[i] * (h.edges()[i + 1] - h.edges()[i]);
  EXPECT_NEAR(integral, 1.0, 1e-12);
  EXPECT_EQ(h.total(), 5000u);
  EXPECT_NEAR(h.mean(), 0.5, 0.02);
}

TEST(Histogram, FlowAndEdges) {
  Histogram h({0.0, 0.5, 1.0});
  h.fill(-0.1);
  h.fill(1.0);
  h.fill(1.5);
  h.fill(0.5);
  EXPECT_EQ(h.underflow(), 1u);
  EXPECT_EQ(h.overflow(), 1u);
  EXPECT_EQ(h.counts()[1], 2u);
  expect_code(ss::ErrorCode::DegenerateBins, [] { Histogram::uniform(0); });
  expect_code(ss::ErrorCode::DegenerateBins, [] { Histogram({0.0, 0.0}); });
}

TEST(Ks, TwoSample) {
  const auto a = uniforms(500, 2);
  EXPECT_EQ(ks_two_sample(a, a), 0.0);
  EXPECT_EQ(ks_two_sample(uniforms(100, 3, 0, 1), uniforms(100, 4, 2, 3)), 1.0);
  EXPECT_LT(ks_two_sample(uniforms(2000, 5), uniforms(2000, 6)), ks_critical(0.01, 2000, 2000));
}

TEST(Ks, OneSampleAndAtoms) {
  const auto a = uniforms(2000, 7);
  const double d = ks_one_sample(a, [](double x) { return std::clamp(x, 0.0, 1.0); });
  EXPECT_LT(d, ks_critical(0.01, 2000));
  const std::vector<double> sample{1.0, 1.0, 2.0, 2.0};
  const std::vector<double> atoms{1.0, 2.0};
  EXPECT_NEAR(ks_against_atoms(sample, atoms), 0.0, 1e-15);
  EXPECT_NEAR(ks_critical(0.01, 100), std::sqrt(-std::log(0.005) / 2) / 10, 1e-12);
}

TEST(Chi2, SelfIsZeroAndMerges) {
  auto h = Histogram::uniform(10);
  h.fill(uniforms(1000, 8));
  const auto r = chi2_two_sample(h, h);
  EXPECT_NEAR(r.chi2, 0.0, 1e-12);
  EXPECT_EQ(r.n_bins, 10);
  auto sparse = Histogram::uniform(50);
  sparse.fill(uniforms(60, 9));
  EXPECT_LT(chi2_two_sample(sparse, sparse).n_bins, 50);
  const auto rep = compare(uniforms(300, 10), uniforms(400, 11), 10);
  EXPECT_EQ(rep.samples_a, 300u);
  EXPECT_EQ(rep.samples_b, 400u);
}

TEST(Io, ZSamples) {
  std::stringstream s("z\n# comment\n0.7\n0.9\n");
  EXPECT_EQ(ss::io::read_z_samples(s), (std::vector<double>{0.7, 0.9}));
  std::stringstream bad("0.7\nabc\n");
  expect_code(ss::ErrorCode::Parse, [&] { ss::io::read_z_samples(bad); });
  std::stringstream out;
  const std::vector<double> zs{0.1, 1.0 / 3.0};
  ss::io::write_z_samples(out, zs);
  EXPECT_EQ(ss::io::read_z_samples(out), zs);
}

TEST(Io, RunsRoundTrip) {
  const std::vector<ss::io::RunRow> rows{{0, true, {0.5, 0.3, 0.2}}, {1, false, {}}, {2, true, {0.6, 0.4 / 3, 0.2}}};
  std::stringstream s;
  ss::io::write_runs_csv(s, rows, 3);
  EXPECT_EQ(ss::io::read_runs_csv(s), rows);
}

TEST(Io, HistogramJetsCheckRoundTrip) {
  auto h = Histogram::uniform(4);
  h.fill(uniforms(100, 12));
  const std::vector<Histogram> hs{h, h};
  const auto rows = ss::io::histogram_rows(hs);
  EXPECT_EQ(rows.size(), 8u);
  std::stringstream a;
  ss::io::write_histogram_csv(a, rows);
  EXPECT_EQ(ss::io::read_histogram_csv(a), rows);

  const std::vector<ss::io::JetRow> jets{{0, 1, 0.6}, {0, 2, 0.4}, {3, 1, 1.0 / 7}};
  std::stringstream b;
  ss::io::write_jets_csv(b, jets);
  EXPECT_EQ(ss::io::read_jets_csv(b), jets);

  const std::vector<ss::io::CheckRow> checks{{"x", true, 1e-13, 1e-9}, {"y", false, 0.2, 0.1}};
  std::stringstream c;
  ss::io::write_check_csv(c, checks);
  EXPECT_EQ(ss::io::read_check_csv(c), checks);
}

TEST(Io, ScanAndCompareRoundTrip) {
  const std::vector<ss::splitter::ScanPoint> pts{{0.6, 0.1, 0.11, 0.09}, {0.9, 0.01, 0.012, 1.0 / 6}};
  std::stringstream s;
  ss::io::write_scan_csv(s, pts);
  const auto back = ss::io::read_scan_csv(s);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].relative_deviation, pts[1].relative_deviation);
  EXPECT_EQ(back[0].c_qcd, pts[0].c_qcd);

  const CompareReport r{0.125, 3.5, 7, 100, 200};
  std::stringstream c;
  ss::io::write_compare_csv(c, r);
  const auto rb = ss::io::read_compare_csv(c);
  EXPECT_EQ(rb.ks_statistic, r.ks_statistic);
  EXPECT_EQ(rb.chi2, r.chi2);
  EXPECT_EQ(rb.n_bins, r.n_bins);
  EXPECT_EQ(rb.samples_b, r.samples_b);
}

TEST(Io, ConstituentsJsonlRoundTrip) {
  const std::vector<std::vector<ss::jets::PseudoJet>> events{
      {{1.0, 2.0, 3.0, 4.5}, {0.1, -0.2, 0.3, 1.0 / 3}}, {{5.0, 0.0, 0.0, 5.0}}};
  std::stringstream s;
  ss::io::write_constituents_jsonl(s, events);
  const auto back = ss::io::read_constituents_jsonl(s);
  ASSERT_EQ(back.size(), 2u);
  ASSERT_EQ(back[0].size(), 2u);
  EXPECT_EQ(back[0][1].e(), 1.0 / 3);
  EXPECT_EQ(back[1][0].px(), 5.0);
}

TEST(Io, FormatRoundTripsBitExactly) {
  ss::Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.normal() * std::pow(10.0, static_cast<int>(rng.below(20)) - 10);
    std::stringstream s("v\n" + ss::io::format_double(x) + "\n");
    EXPECT_EQ(ss::io::read_column(s, "v")[0], x);
  }
}
