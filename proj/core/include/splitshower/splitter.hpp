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

#include <span>
#include <string_view>
#include <vector>

#include "splitshower/circuit.hpp"
#include "splitshower/density_matrix.hpp"

namespace splitshower::splitter {

/// gamma2 in [pi/2, pi] with 2 cos(gamma1) sin^2(gamma2/2) = 1.
/// Throws ParameterDomain unless gamma1 in [0, pi/3].
double gamma2_from_gamma1(double gamma1);

/// Momentum fraction encoded on the upper output wire,
///   (1 + cos(gamma3)(sec(gamma1) - 2)) / 2.
/// Throws ParameterDomain unless gamma1 in [0, pi/3].
double z_of(double gamma1, double gamma3);

/// Off-diagonal of the upper wire's reduced state,
///   sqrt(2 cos(gamma1) - 1) sec(gamma1) cos((gamma1 - gamma3)/2) / 2.
double xi(double gamma1, double gamma3);

/// One calibrated splitting: (gamma1, gamma2, gamma3) on the constraint
/// surface 2 cos(gamma1) sin^2(gamma2/2) = 1.
class SplittingParams {
 public:
  static constexpr double kConstraintTol = 1e-10;

  /// Throws ParameterDomain if any angle is outside its range or the
  /// constraint residual exceeds kConstraintTol.
  SplittingParams(double gamma1, double gamma2, double gamma3);

  /// gamma2 taken from gamma2_from_gamma1.
  static SplittingParams from_gamma1_gamma3(double gamma1, double gamma3);

  double gamma1() const noexcept { return gamma1_; }
  double gamma2() const noexcept { return gamma2_; }
  double gamma3() const noexcept { return gamma3_; }

  double z() const { return z_of(gamma1_, gamma3_); }
  double constraint_residual() const;

  friend bool operator==(const SplittingParams&, const SplittingParams&) = default;

 private:
  double gamma1_;
  double gamma2_;
  double gamma3_;
};

/// Appends the splitting block acting on (upper, lower):
///   RY(gamma2) upper; U3(gamma1, 0, pi/2) lower;
///   open-controlled RY(gamma3 - gamma1) upper -> lower;
///   open-controlled X lower -> upper.
void append_block(qsim::Circuit& circuit, const SplittingParams& p, int upper, int lower);

/// Two-qubit circuit of the block on wires (0, 1), both measured.
qsim::Circuit build_block(const SplittingParams& p);

enum class TopologyKind { TwoProng, ThreeDominant, ThreeSecondary, FourBalanced, FourDominant };

std::string_view to_string(TopologyKind kind) noexcept;
/// Accepts the names printed by to_string (case-insensitive) and the short
/// forms "two", "three", "three-secondary", "four", "four-dominant".
/// Throws Parse.
TopologyKind parse_topology(std::string_view name);

std::size_t splitting_count(TopologyKind kind) noexcept;

/// One splitting inside a topology. The high child's fraction is read on
/// high_wire, the low child's on low_wire. `parent` indexes an earlier split
/// (-1 for the root) and `parent_high` says which child of it is split here.
struct SplitNode {
  int high_wire;
  int low_wire;
  int parent;
  bool parent_high;
};

/// A block, or the CNOT (filled control) that feeds a split's parent
/// fraction into its lower wire.
struct LayoutStep {
  enum class Kind { Block, Link };
  Kind kind;
  int split;
};

struct TopologyLayout {
  int n_qubits;
  std::vector<SplitNode> splits;        // in splitting order
  std::vector<LayoutStep> steps;        // gate order as drawn
  std::vector<int> final_wires;         // ascending
  std::vector<int> intermediate_wires;  // ascending

  /// Wire carrying the fraction that split `s` divides.
  int input_wire(int s) const;
};

const TopologyLayout& layout(TopologyKind kind);

struct ShowerTopology {
  TopologyKind kind;
  std::vector<SplittingParams> params;  // in splitting order
};

/// Throws TopologyParamMismatch if the parameter count does not match.
void check_params(const ShowerTopology& topology);

struct BuildOptions {
  bool measure_intermediate = false;
};

/// Wire layout as drawn in the reference figures: ThreeDominant puts block 1
/// on wires 2-3, links 2 -> 1 and places block 2 on wires 0-1; FourDominant
/// starts at the bottom (wires 4-5) and chains upward. Throws
/// TopologyParamMismatch.
qsim::Circuit build_topology(const ShowerTopology& topology, BuildOptions options = {});

/// Final-prong momentum fractions in descending order, with the wire each
/// one was read from, plus the fractions on intermediate wires (ascending
/// wire order).
struct ProngFractions {
  std::vector<double> final;
  std::vector<int> final_wires;
  std::vector<double> intermediate;

  double sum() const;
};

/// Sorts (value, wire) pairs descending by value.
ProngFractions make_fractions(std::vector<double> values, std::vector<int> wires,
                              std::vector<double> intermediate = {});

/// Products of splitting fractions propagated down the topology's tree.
ProngFractions analytic_fractions(const ShowerTopology& topology);

/// <sigma_3> on the final and intermediate wires of the exact output state.
ProngFractions exact_fractions(const ShowerTopology& topology);

struct ReducedPair {
  qsim::DensityMatrix a;
  qsim::DensityMatrix b;
};

/// Closed-form one-qubit reduced states on wires A (0) and B (1) after a
/// block with parameters `second` whose lower input carries fraction z
/// (ThreeDominant with z = first splitting). z = 1 gives the single-block
/// states. Throws ParameterDomain.
ReducedPair predicted_reduced_AB(double z, const SplittingParams& second);

struct ScanPoint {
  double z_prime;
  double concurrence;
  double c_qcd;
  double relative_deviation;
};

/// For each z', calibrates ThreeDominant with (z_first, z'), traces out
/// wires 2-3 and evaluates the Wootters concurrence of wires 0-1.
/// Propagates CalibrationInfeasible.
std::vector<ScanPoint> composed_concurrence_scan(double z_first, std::span<const double> z_prime_grid);

}  // namespace splitshower::splitter
