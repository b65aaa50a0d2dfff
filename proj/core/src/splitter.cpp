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

#include "splitshower/splitter.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "splitshower/error.hpp"

namespace splitshower::splitter {

namespace {

constexpr double kAngleSlack = 1e-12;
constexpr double kPi = std::numbers::pi;

void require_gamma1(double gamma1) {
  if (!(gamma1 >= -kAngleSlack && gamma1 <= kPi / 3.0 + kAngleSlack)) {
    throw Error(ErrorCode::ParameterDomain, fmt::format("gamma1 = {:.17g} outside [0, pi/3]", gamma1));
  }
}

using Step = LayoutStep;
constexpr auto kBlock = LayoutStep::Kind::Block;
constexpr auto kLink = LayoutStep::Kind::Link;

const std::array<TopologyLayout, 5>& layouts() {
  static const std::array<TopologyLayout, 5> table = {{
      // TwoProng
      {2, {{0, 1, -1, true}}, {Step{kBlock, 0}}, {0, 1}, {}},
      // ThreeDominant: block on C-D, C -> B, block on A-B.
      {4,
       {{2, 3, -1, true}, {0, 1, 0, true}},
       {Step{kBlock, 0}, Step{kLink, 1}, Step{kBlock, 1}},
       {0, 1, 3},
       {2}},
      // ThreeSecondary: the low-momentum daughter on wire 1 splits again.
      {4,
       {{0, 1, -1, true}, {2, 3, 0, false}},
       {Step{kBlock, 0}, Step{kLink, 1}, Step{kBlock, 1}},
       {0, 2, 3},
       {1}},
      // FourBalanced: both daughters of the first block split.
      {6,
       {{2, 3, -1, true}, {0, 1, 0, true}, {4, 5, 0, false}},
       {Step{kBlock, 0}, Step{kLink, 1}, Step{kLink, 2}, Step{kBlock, 1}, Step{kBlock, 2}},
       {0, 1, 4, 5},
       {2, 3}},
      // FourDominant: ladder from the bottom pair upward.
      {6,
       {{4, 5, -1, true}, {2, 3, 0, true}, {0, 1, 1, true}},
       {Step{kBlock, 0}, Step{kLink, 1}, Step{kBlock, 1}, Step{kLink, 2}, Step{kBlock, 2}},
       {0, 1, 3, 5},
       {2, 4}},
  }};
  return table;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Fraction carried by each child node of every split, indexed
// [split][0 = high, 1 = low].
std::vector<std::array<double, 2>> node_values(const TopologyLayout& lay,
                                               std::span<const SplittingParams> params) {
  std::vector<std::array<double, 2>> values(lay.splits.size());
  for (std::size_t s = 0; s < lay.splits.size(); ++s) {
    const auto& node = lay.splits[s];
    const double parent =
        node.parent < 0 ? 1.0 : values[node.parent][node.parent_high ? 0 : 1];
    const double z = params[s].z();
    values[s] = {parent * z, parent * (1.0 - z)};
  }
  return values;
}

}  // namespace

double gamma2_from_gamma1(double gamma1) {
  require_gamma1(gamma1);
  const double s2 = std::min(1.0, 1.0 / (2.0 * std::cos(gamma1)));
  return 2.0 * std::asin(std::sqrt(s2));
}

double z_of(double gamma1, double gamma3) {
  require_gamma1(gamma1);
  return 0.5 * (1.0 + std::cos(gamma3) * (1.0 / std::cos(gamma1) - 2.0));
}

double xi(double gamma1, double gamma3) {
  const double c1 = std::cos(gamma1);
  return 0.5 * std::sqrt(std::max(0.0, 2.0 * c1 - 1.0)) / c1 * std::cos((gamma1 - gamma3) / 2.0);
}

SplittingParams::SplittingParams(double gamma1, double gamma2, double gamma3)
    : gamma1_(gamma1), gamma2_(gamma2), gamma3_(gamma3) {
  require_gamma1(gamma1);
  if (!(gamma2 >= kPi / 2.0 - kAngleSlack && gamma2 <= kPi + kAngleSlack)) {
    throw Error(ErrorCode::ParameterDomain, fmt::format("gamma2 = {:.17g} outside [pi/2, pi]", gamma2));
  }
  if (!(gamma3 >= -kAngleSlack && gamma3 <= kPi + kAngleSlack)) {
    throw Error(ErrorCode::ParameterDomain, fmt::format("gamma3 = {:.17g} outside [0, pi]", gamma3));
  }
  if (std::abs(constraint_residual()) > kConstraintTol) {
    throw Error(ErrorCode::ParameterDomain,
                fmt::format("2 cos(g1) sin^2(g2/2) - 1 = {:.3g}", constraint_residual()));
  }
}

SplittingParams SplittingParams::from_gamma1_gamma3(double gamma1, double gamma3) {
  return SplittingParams(gamma1, gamma2_from_gamma1(gamma1), gamma3);
}

double SplittingParams::constraint_residual() const {
  const double s = std::sin(gamma2_ / 2.0);
  return 2.0 * std::cos(gamma1_) * s * s - 1.0;
}

void append_block(qsim::Circuit& circuit, const SplittingParams& p, int upper, int lower) {
  circuit.add(qsim::ry(upper, p.gamma2()));
  circuit.add(qsim::u3(lower, p.gamma1(), 0.0, kPi / 2.0));
  circuit.add(qsim::controlled(qsim::RY{p.gamma3() - p.gamma1()}, upper, lower, 0));
  circuit.add(qsim::controlled(qsim::PauliX{}, lower, upper, 0));
}

qsim::Circuit build_block(const SplittingParams& p) {
  qsim::Circuit c(2);
  append_block(c, p, 0, 1);
  c.set_measured({0, 1});
  return c;
}

std::string_view to_string(TopologyKind kind) noexcept {
  switch (kind) {
    case TopologyKind::TwoProng: return "TwoProng";
    case TopologyKind::ThreeDominant: return "ThreeDominant";
    case TopologyKind::ThreeSecondary: return "ThreeSecondary";
    case TopologyKind::FourBalanced: return "FourBalanced";
    case TopologyKind::FourDominant: return "FourDominant";
  }
  return "Unknown";
}

TopologyKind parse_topology(std::string_view name) {
  const std::string n = lower(name);
  if (n == "twoprong" || n == "two") return TopologyKind::TwoProng;
  if (n == "threedominant" || n == "three") return TopologyKind::ThreeDominant;
  if (n == "threesecondary" || n == "three-secondary") return TopologyKind::ThreeSecondary;
  if (n == "fourbalanced" || n == "four") return TopologyKind::FourBalanced;
  if (n == "fourdominant" || n == "four-dominant") return TopologyKind::FourDominant;
  throw Error(ErrorCode::Parse, fmt::format("unknown topology '{}'", name));
}

std::size_t splitting_count(TopologyKind kind) noexcept {
  return layout(kind).splits.size();
}

const TopologyLayout& layout(TopologyKind kind) {
  return layouts()[static_cast<std::size_t>(kind)];
}

int TopologyLayout::input_wire(int s) const {
  const auto& node = splits[s];
  if (node.parent < 0) return -1;
  const auto& parent = splits[node.parent];
  return node.parent_high ? parent.high_wire : parent.low_wire;
}

void check_params(const ShowerTopology& topology) {
  const std::size_t want = splitting_count(topology.kind);
  if (topology.params.size() != want) {
    throw Error(ErrorCode::TopologyParamMismatch,
                fmt::format("{} needs {} splittings, got {}", to_string(topology.kind), want,
                            topology.params.size()));
  }
}

qsim::Circuit build_topology(const ShowerTopology& topology, BuildOptions options) {
  check_params(topology);
  const TopologyLayout& lay = layout(topology.kind);
  qsim::Circuit c(lay.n_qubits);
  for (const auto& step : lay.steps) {
    const auto& node = lay.splits[step.split];
    if (step.kind == LayoutStep::Kind::Block) {
      append_block(c, topology.params[step.split], node.high_wire, node.low_wire);
    } else {
      c.add(qsim::cnot(lay.input_wire(step.split), node.low_wire));
    }
  }
  std::vector<int> measured = lay.final_wires;
  if (options.measure_intermediate) {
    measured.insert(measured.end(), lay.intermediate_wires.begin(), lay.intermediate_wires.end());
    std::sort(measured.begin(), measured.end());
  }
  c.set_measured(std::move(measured));
  return c;
}

double ProngFractions::sum() const { return std::accumulate(final.begin(), final.end(), 0.0); }

ProngFractions make_fractions(std::vector<double> values, std::vector<int> wires,
                              std::vector<double> intermediate) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  ProngFractions f;
  for (auto i : order) {
    f.final.push_back(values[i]);
    f.final_wires.push_back(wires[i]);
  }
  f.intermediate = std::move(intermediate);
  return f;
}

ProngFractions analytic_fractions(const ShowerTopology& topology) {
  check_params(topology);
  const TopologyLayout& lay = layout(topology.kind);
  const auto values = node_values(lay, topology.params);

  // Value on each wire at the end of the circuit: the child fraction it holds.
  std::vector<double> on_wire(static_cast<std::size_t>(lay.n_qubits), 0.0);
  for (std::size_t s = 0; s < lay.splits.size(); ++s) {
    on_wire[lay.splits[s].high_wire] = values[s][0];
    on_wire[lay.splits[s].low_wire] = values[s][1];
  }
  std::vector<double> finals, inter;
  for (int w : lay.final_wires) finals.push_back(on_wire[w]);
  for (int w : lay.intermediate_wires) inter.push_back(on_wire[w]);
  return make_fractions(std::move(finals), lay.final_wires, std::move(inter));
}

ProngFractions exact_fractions(const ShowerTopology& topology) {
  const qsim::Circuit c = build_topology(topology);
  const qsim::StateVector out = qsim::run(c);
  const TopologyLayout& lay = layout(topology.kind);
  std::vector<double> finals, inter;
  for (int w : lay.final_wires) finals.push_back(qsim::expect_sigma3(out, w));
  for (int w : lay.intermediate_wires) inter.push_back(qsim::expect_sigma3(out, w));
  return make_fractions(std::move(finals), lay.final_wires, std::move(inter));
}

ReducedPair predicted_reduced_AB(double z, const SplittingParams& second) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw Error(ErrorCode::ParameterDomain, fmt::format("z = {:.17g} not in [0, 1]", z));
  }
  const double g1 = second.gamma1();
  const double g3 = second.gamma3();
  const double k = (1.0 / std::cos(g1) - 2.0) * std::cos(g3);
  const double off_a = xi(g1, g3);
  // The lower wire's coherence scales with the incoming fraction.
  const double off_b = z * xi(g1, kPi - g3);

  Eigen::Matrix2cd a, b;
  a << 0.5 * (1.0 + 0.5 * z * (1.0 + k)), off_a, off_a, 0.5 * (1.0 - 0.5 * z * (1.0 + k));
  b << 0.5 * (1.0 + 0.5 * z * (1.0 - k)), off_b, off_b, 0.5 * (1.0 - 0.5 * z * (1.0 - k));
  return {qsim::DensityMatrix::from_matrix(a), qsim::DensityMatrix::from_matrix(b)};
}

}  // namespace splitshower::splitter
