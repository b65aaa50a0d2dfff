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

#include "splitshower/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "splitshower/error.hpp"

namespace splitshower::stats {

namespace {

constexpr double kMinExpected = 5.0;

std::vector<double> sorted_copy(std::span<const double> xs) {
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Histogram Histogram::uniform(int bins, double lo, double hi) {
  if (bins < 1 || !(hi > lo)) {
    throw Error(ErrorCode::DegenerateBins, fmt::format("{} bins on [{}, {}]", bins, lo, hi));
  }
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
  edges.back() = hi;
  return Histogram(std::move(edges));
}

Histogram::Histogram(std::vector<double> edges) : edges_(std::move(edges)) {
  if (edges_.size() < 2 || std::adjacent_find(edges_.begin(), edges_.end(), std::greater_equal<>()) != edges_.end()) {
    throw Error(ErrorCode::DegenerateBins, "edges must be strictly ascending");
  }
  counts_.assign(edges_.size() - 1, 0);
}

void Histogram::fill(double x) {
  if (x < edges_.front()) {
    ++underflow_;
    return;
  }
  if (x > edges_.back()) {
    ++overflow_;
    return;
  }
  auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  auto bin = static_cast<std::size_t>(it - edges_.begin()) - 1;
  if (bin >= counts_.size()) bin = counts_.size() - 1;
  ++counts_[bin];
}

void Histogram::fill(std::span<const double> xs) {
  for (double x : xs) fill(x);
}

std::uint64_t Histogram::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::vector<double> Histogram::densities() const {
  const double n = static_cast<double>(total());
  std::vector<double> d(counts_.size(), 0.0);
  if (n == 0.0) return d;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    d[i] = static_cast<double>(counts_[i]) / (n * (edges_[i + 1] - edges_[i]));
  return d;
}

double Histogram::mean() const {
  const double n = static_cast<double>(total());
  if (n == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    s += static_cast<double>(counts_[i]) * 0.5 * (edges_[i] + edges_[i + 1]);
  return s / n;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyInput, "KS needs two nonempty samples");
  const auto sa = sorted_copy(a), sb = sorted_copy(b);
  const double na = static_cast<double>(sa.size()), nb = static_cast<double>(sb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_one_sample(std::span<const double> sample, const std::function<double(double)>& cdf,
                     const std::function<double(double)>& cdf_left) {
  if (sample.empty()) throw Error(ErrorCode::EmptyInput, "KS needs a nonempty sample");
  const auto s = sorted_copy(sample);
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < s.size()) {
    const double x = s[i];
    const std::size_t below = i;
    while (i < s.size() && s[i] == x) ++i;
    const double f = cdf(x);
    const double fl = cdf_left ? cdf_left(x) : f;
    d = std::max({d, std::abs(static_cast<double>(i) / n - f), std::abs(static_cast<double>(below) / n - fl)});
  }
  return d;
}

double ks_against_atoms(std::span<const double> sample, std::span<const double> atoms,
                        std::span<const double> weights) {
  if (atoms.empty()) throw Error(ErrorCode::EmptyInput, "no reference atoms");
  std::vector<std::pair<double, double>> ref;
  for (std::size_t i = 0; i < atoms.size(); ++i) ref.emplace_back(atoms[i], weights.empty() ? 1.0 : weights[i]);
  std::sort(ref.begin(), ref.end());
  std::vector<double> xs, cum;
  double total = 0.0;
  for (const auto& [x, w] : ref) {
    total += w;
    if (!xs.empty() && xs.back() == x) {
      cum.back() = total;
    } else {
      xs.push_back(x);
      cum.push_back(total);
    }
  }
  auto cdf = [&](double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    return it == xs.begin() ? 0.0 : cum[static_cast<std::size_t>(it - xs.begin()) - 1] / total;
  };
  auto cdf_left = [&](double x) {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    return it == xs.begin() ? 0.0 : cum[static_cast<std::size_t>(it - xs.begin()) - 1] / total;
  };
  // The sup over the reference's own jump points also has to be covered.
  double d = ks_one_sample(sample, cdf, cdf_left);
  const auto s = sorted_copy(sample);
  const double n = static_cast<double>(s.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double fs = static_cast<double>(std::upper_bound(s.begin(), s.end(), xs[k]) - s.begin()) / n;
    const double fs_left = static_cast<double>(std::lower_bound(s.begin(), s.end(), xs[k]) - s.begin()) / n;
    d = std::max({d, std::abs(fs - cum[k] / total), std::abs(fs_left - (k ? cum[k - 1] / total : 0.0))});
  }
  return d;
}

double ks_critical(double alpha, std::uint64_t n, std::uint64_t m) {
  const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  if (m == 0) return c / std::sqrt(static_cast<double>(n));
  const double dn = static_cast<double>(n), dm = static_cast<double>(m);
  return c * std::sqrt((dn + dm) / (dn * dm));
}

Chi2Result chi2_two_sample(const Histogram& a, const Histogram& b) {
  if (a.edges() != b.edges()) throw Error(ErrorCode::DegenerateBins, "histograms have different edges");
  const double na = static_cast<double>(a.total()), nb = static_cast<double>(b.total());
  if (na == 0.0 || nb == 0.0) throw Error(ErrorCode::DegenerateBins, "empty histogram");

  std::vector<std::pair<double, double>> merged;
  double ca = 0.0, cb = 0.0;
  auto ready = [&](double x, double y) {
    const double pooled = (x + y) / (na + nb);
    return pooled * na >= kMinExpected && pooled * nb >= kMinExpected;
  };
  for (std::size_t i = 0; i < a.bins(); ++i) {
    ca += static_cast<double>(a.counts()[i]);
    cb += static_cast<double>(b.counts()[i]);
    if (ready(ca, cb)) {
      merged.emplace_back(ca, cb);
      ca = cb = 0.0;
    }
  }
  if (ca + cb > 0.0) {
    if (merged.empty()) throw Error(ErrorCode::DegenerateBins, "too few entries for any bin to reach 5 expected");
    merged.back().first += ca;
    merged.back().second += cb;
  }
  const double ka = std::sqrt(nb / na), kb = std::sqrt(na / nb);
  double chi2 = 0.0;
  for (const auto& [x, y] : merged) {
    const double diff = ka * x - kb * y;
    chi2 += diff * diff / (x + y);
  }
  return {chi2, static_cast<int>(merged.size())};
}

CompareReport compare(std::span<const double> a, std::span<const double> b, int bins) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyInput, "compare needs two nonempty samples");
  Histogram ha = Histogram::uniform(bins), hb = Histogram::uniform(bins);
  ha.fill(a);
  hb.fill(b);
  const Chi2Result c = chi2_two_sample(ha, hb);
  return {ks_two_sample(a, b), c.chi2, c.n_bins, a.size(), b.size()};
}

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

}  // namespace splitshower::stats
