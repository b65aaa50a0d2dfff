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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "splitshower/calibrate.hpp"
#include "splitshower/circuit.hpp"
#include "splitshower/noise.hpp"
#include "splitshower/sampling.hpp"
#include "splitshower/splitter.hpp"
#include "support/expect.hpp"

namespace ss = splitshower;
using namespace splitshower::noise;
using splitshower::splitter::TopologyKind;
using splitshower::testing::expect_code;

namespace {

ss::splitter::ShowerTopology three(double z1, double z2) {
  return {TopologyKind::ThreeDominant, {ss::calibrate::solve_params(z1), ss::calibrate::solve_params(z2)}};
}

ss::qsim::Circuit bell_circuit() {
  ss::qsim::Circuit c(2);
  c.add(ss::qsim::ry(0, std::numbers::pi / 2)).add(ss::qsim::cnot(0, 1));
  return c;
}

}  // namespace

TEST(Model, Validation) {
  EXPECT_NO_THROW(NoiseModel{}.validate());
  expect_code(ss::ErrorCode::OutOfRange, [] { NoiseModel{0.5, 0.0, 0.0}.validate(); });
  expect_code(ss::ErrorCode::OutOfRange, [] { NoiseModel{0.0, -0.1, 0.0}.validate(); });
  expect_code(ss::ErrorCode::OutOfRange, [] { NoiseModel{0.0, 0.0, 0.6}.validate(); });
  expect_code(ss::ErrorCode::OutOfRange, [] { RunBatch{0, 10, 0}.validate(); });
  expect_code(ss::ErrorCode::ZeroShots, [] { RunBatch{1, 0, 0}.validate(); });
}

TEST(Evolution, NoiselessMatchesStateVector) {
  const auto c = ss::splitter::build_topology(three(0.8, 0.7));
  const auto p = noisy_probabilities(c, 0.0);
  const auto q = ss::qsim::run(c).probabilities();
  ASSERT_EQ(p.size(), q.size());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], q[i], 1e-14);
}

TEST(Evolution, FullDepolarizationIsUniform) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
  rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
  depolarize(rho, 2, 0, 1, 1.0);
  EXPECT_LT((rho - Eigen::MatrixXcd::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff(), 1e-15);
  const auto counts = sample_run(noisy_probabilities(bell_circuit(), 0.0), 2, NoiseModel::noiseless(), 1000, 1);
  EXPECT_EQ(counts.count("01"), 0u);
}

TEST(Evolution, DepolarizationPreservesTrace) {
  const auto rho = evolve_density(ss::splitter::build_topology(three(0.9, 0.6)), 0.2);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  EXPECT_LT((rho - rho.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Sampling, ZeroNoiseMatchesIdealSampler) {
  const auto c = ss::splitter::build_topology(three(0.8, 0.7));
  const auto probs = noisy_probabilities(c, 0.0);
  EXPECT_EQ(sample_run(probs, 4, NoiseModel::noiseless(), 2048, 77),
            ss::qsim::sample_shots(ss::qsim::run(c), 2048, 77));
}

TEST(Sampling, ReadoutFlipRate) {
  const std::vector<double> zero{1.0, 0.0};
  const auto counts = sample_run(zero, 1, {0.1, 0.0, 0.0}, 100000, 5);
  const double sd = std::sqrt(1e5 * 0.1 * 0.9);
  EXPECT_LT(std::abs(static_cast<double>(counts.at("1")) - 1e4), 5 * sd);
}

TEST(Sampling, ReadoutMatchesMixtureFormula) {
  const double p0 = 0.7, p01 = 0.05, p10 = 0.15;
  const std::vector<double> probs{p0, 1 - p0};
  const auto counts = sample_run(probs, 1, {p01, p10, 0.0}, 200000, 6);
  const double want = p0 * (1 - p01) + (1 - p0) * p10;
  const double sd = std::sqrt(2e5 * want * (1 - want));
  EXPECT_LT(std::abs(static_cast<double>(counts.at("0")) - 2e5 * want), 5 * sd);
}

TEST(Sampling, BatchDeterministic) {
  const auto c = ss::splitter::build_topology(three(0.8, 0.7));
  const RunBatch batch{5, 256, 42};
  const auto a = noisy_sample(c, {}, batch), b = noisy_sample(c, {}, batch);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 5u);
  EXPECT_NE(a, noisy_sample(c, {}, RunBatch{5, 256, 43}));
}

TEST(Estimates, Sigma3AndShift) {
  const ss::qsim::Counts counts{{"00", 512}, {"10", 512}};
  const auto w = estimate_wires(counts, 2);
  EXPECT_EQ(w.shots, 1024u);
  EXPECT_NEAR(w.sigma3[0], 0.0, 1e-15);
  EXPECT_NEAR(w.sigma3[1], 1.0, 1e-15);
  const auto s = sigma_shift(w, TopologyKind::TwoProng);
  EXPECT_NEAR(s.sigma3[0], 0.015625, 1e-15);
  EXPECT_NEAR(s.sigma3[1], 1.0, 1e-15);
}

TEST(Derived, RejectsNegativeLowChild) {
  WireEstimates w{{0.9, 0.0, 0.8, 0.0}, {0.95, 0.5, 0.9, 0.5}, 1024};
  EXPECT_FALSE(derive_fractions(w, TopologyKind::ThreeDominant).has_value());
  w.sigma3[0] = 0.5;
  const auto f = derive_fractions(w, TopologyKind::ThreeDominant);
  ASSERT_TRUE(f.has_value());
  EXPECT_NEAR(f->sum(), 1.0, 1e-15);
  EXPECT_NEAR(f->final[0], 0.5, 1e-15);
}

TEST(Postprocess, NoiselessLargeShotMatchesAnalytic) {
  const auto t = three(0.85, 0.7);
  const auto c = ss::splitter::build_topology(t);
  const auto counts = sample_run(noisy_probabilities(c, 0.0), 4, NoiseModel::noiseless(), 1000000, 3);
  const auto want = ss::splitter::analytic_fractions(t).final;
  for (auto mode : {Postprocess::Raw, Postprocess::Derived, Postprocess::Shifted}) {
    const auto got = postprocess(counts, TopologyKind::ThreeDominant, mode);
    ASSERT_TRUE(got.has_value());
    EXPECT_NEAR(got->sum(), 1.0, 5e-3);
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got->final[i], want[i], 5e-3) << to_string(mode);
  }
}

TEST(Postprocess, ShiftedSumsToOne) {
  const auto c = ss::splitter::build_topology(three(0.9, 0.8));
  for (const auto& counts : noisy_sample(c, {}, RunBatch{20, 512, 9})) {
    if (const auto f = shifted_fractions(counts, TopologyKind::ThreeDominant)) EXPECT_NEAR(f->sum(), 1.0, 1e-12);
  }
  EXPECT_EQ(parse_postprocess("shifted"), Postprocess::Shifted);
  expect_code(ss::ErrorCode::Parse, [] { parse_postprocess("median"); });
}

TEST(Postprocess, NoiselessRunsWithinThreeSigma) {
  const auto t = three(0.8, 0.7);
  const auto c = ss::splitter::build_topology(t);
  const double truth = 0.8 * 0.7;  // on wire 0
  const double p0 = (1 + truth) / 2, sigma = 2 * std::sqrt(p0 * (1 - p0) / 1024);
  int inside = 0;
  const auto runs = noisy_sample(c, NoiseModel::noiseless(), RunBatch{300, 1024, 4});
  for (const auto& counts : runs) {
    const auto f = fractions_from_counts(counts, TopologyKind::ThreeDominant);
    ASSERT_TRUE(f.has_value());
    if (std::abs(f->final[0] - truth) <= 3 * sigma) ++inside;
  }
  EXPECT_GE(inside, 294);
}
