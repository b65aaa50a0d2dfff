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
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "splitshower/circuit.hpp"
#include "splitshower/sampling.hpp"
#include "splitshower/splitter.hpp"

namespace splitshower::noise {

/// Readout flip probabilities (0 -> 1 and 1 -> 0) applied per measured bit,
/// and a two-qubit depolarizing probability applied after every two-qubit
/// gate. Each must lie in [0, 0.5).
struct NoiseModel {
  double readout_p01 = 0.02;
  double readout_p10 = 0.02;
  double twoqubit_depol = 0.01;

  static NoiseModel noiseless() { return {0.0, 0.0, 0.0}; }
  /// Throws OutOfRange.
  void validate() const;
};

struct RunBatch {
  std::uint64_t runs = 500;
  std::uint64_t shots_per_run = 1024;
  std::uint64_t seed = 0;

  /// Throws OutOfRange (runs) or ZeroShots.
  void validate() const;
};

/// rho -> (1 - p) rho + p Tr_ab(rho) (x) I/4 on wires a, b. p in [0, 1].
void depolarize(Eigen::MatrixXcd& rho, int n_qubits, int a, int b, double p);

/// Density matrix of the circuit output from |0...0>, with the two-qubit
/// channel after each two-qubit gate. Throws TooManyQubits, OutOfRange.
Eigen::MatrixXcd evolve_density(const qsim::Circuit& circuit, double twoqubit_depol);

/// Diagonal of evolve_density.
std::vector<double> noisy_probabilities(const qsim::Circuit& circuit, double twoqubit_depol);

/// One run: shots drawn from `probs` with Rng(run_seed), then readout flips
/// from the same stream. Flips draw no random numbers when both readout
/// probabilities are zero, so a noiseless model reproduces
/// qsim::sample_shots(state, shots, run_seed).
qsim::Counts sample_run(std::span<const double> probs, int n_qubits, const NoiseModel& model,
                        std::uint64_t shots, std::uint64_t run_seed);

/// Run r uses stream_seed(batch.seed, r).
std::vector<qsim::Counts> noisy_sample(const qsim::Circuit& circuit, const NoiseModel& model,
                                       const RunBatch& batch);

/// Per-wire tallies of one run.
struct WireEstimates {
  std::vector<double> sigma3;  // (n0 - n1) / shots
  std::vector<double> p0;      // n0 / shots
  std::uint64_t shots = 0;
};

WireEstimates estimate_wires(const qsim::Counts& counts, int n_qubits);

/// Fractions read from the high-side wire of every split: the high child is
/// the wire's estimate, the low child is the parent minus it. nullopt when a
/// derived fraction is negative.
std::optional<splitter::ProngFractions> derive_fractions(const WireEstimates& w,
                                                         splitter::TopologyKind kind);

std::optional<splitter::ProngFractions> fractions_from_counts(const qsim::Counts& counts,
                                                              splitter::TopologyKind kind);

/// Adds sqrt(p0 (1 - p0) / shots) to each high-side estimate.
WireEstimates sigma_shift(WireEstimates w, splitter::TopologyKind kind);

/// sigma_shift, derive_fractions, then renormalize the final fractions.
std::optional<splitter::ProngFractions> shifted_fractions(const qsim::Counts& counts,
                                                          splitter::TopologyKind kind);

/// Every final wire read directly; nullopt when any is negative.
std::optional<splitter::ProngFractions> raw_mode(const qsim::Counts& counts, splitter::TopologyKind kind);

enum class Postprocess { Raw, Derived, Shifted };

std::string_view to_string(Postprocess p) noexcept;
/// "raw", "derived", "shifted". Throws Parse.
Postprocess parse_postprocess(std::string_view name);

std::optional<splitter::ProngFractions> postprocess(const qsim::Counts& counts, splitter::TopologyKind kind,
                                                    Postprocess mode);

}  // namespace splitshower::noise
