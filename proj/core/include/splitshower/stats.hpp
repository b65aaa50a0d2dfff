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
#include <functional>
#include <span>
#include <vector>

namespace splitshower::stats {

class Histogram {
 public:
  /// `bins` uniform bins on [lo, hi]. Throws DegenerateBins.
  static Histogram uniform(int bins, double lo = 0.0, double hi = 1.0);
  /// Throws DegenerateBins unless edges are strictly ascending with >= 2 entries.
  explicit Histogram(std::vector<double> edges);

  /// Values equal to the upper edge land in the last bin; values outside
  /// the range are tallied as underflow/overflow only.
  void fill(double x);
  void fill(std::span<const double> xs);

  const std::vector<double>& edges() const noexcept { return edges_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::size_t bins() const noexcept { return counts_.size(); }
  std::uint64_t total() const;
  std::uint64_t underflow() const noexcept { return underflow_; }
  std::uint64_t overflow() const noexcept { return overflow_; }

  /// count / (total * width); all zero for an empty histogram.
  std::vector<double> densities() const;
  double mean() const;  // bin-centre mean

 private:
  std::vector<double> edges_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t underflow_ = 0;
  std::uint64_t overflow_ = 0;
};

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|. Throws EmptyInput.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// One-sample statistic against a continuous or discrete reference CDF.
/// For a discrete reference pass `cdf_left` returning P(X < x).
double ks_one_sample(std::span<const double> sample, const std::function<double(double)>& cdf,
                     const std::function<double(double)>& cdf_left = {});

/// One-sample statistic against the empirical distribution of weighted atoms.
double ks_against_atoms(std::span<const double> sample, std::span<const double> atoms,
                        std::span<const double> weights = {});

/// Asymptotic critical value sqrt(-ln(alpha/2)/2) * sqrt((n + m)/(n m));
/// m = 0 gives the one-sample value for n.
double ks_critical(double alpha, std::uint64_t n, std::uint64_t m = 0);

struct Chi2Result {
  double chi2 = 0.0;
  int n_bins = 0;  // after merging
};

/// Pearson chi-square between two histograms with the same edges. Adjacent
/// bins are merged left to right until both expected counts reach 5.
/// Throws DegenerateBins (mismatched edges, empty input, nothing left).
Chi2Result chi2_two_sample(const Histogram& a, const Histogram& b);

struct CompareReport {
  double ks_statistic = 0.0;
  double chi2 = 0.0;
  int n_bins = 0;
  std::uint64_t samples_a = 0;
  std::uint64_t samples_b = 0;
};

/// Throws EmptyInput, DegenerateBins.
CompareReport compare(std::span<const double> a, std::span<const double> b, int bins);

double mean(std::span<const double> xs);

}  // namespace splitshower::stats
