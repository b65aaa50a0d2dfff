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

#include "splitshower/density_matrix.hpp"

namespace splitshower::entanglement {

/// Two-qubit entanglement monotone, 0 for product states and 1 for Bell states.
class Concurrence {
 public:
  /// Accepts values within 1e-12 of [0, 1] and clamps them; anything else
  /// throws OutOfRange.
  explicit Concurrence(double value);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Helicity entanglement of the g -> gg vertex:
///   (z(1-z) / (1 - z(1-z)))^2.
/// Throws OutOfRange unless 0 <= z <= 1.
Concurrence c_qcd(double z);

/// Radicand of the splitting block's concurrence (trigonometric form), before
/// clamping.
double c_circuit_radicand(double gamma1, double gamma3);

/// Concurrence of the splitting block's output state as a closed form in
/// (gamma1, gamma3). Throws ParameterDomain unless gamma1 in [0, pi/3].
Concurrence c_circuit(double gamma1, double gamma3);

/// 2 sqrt(det rho_A) for the one-qubit marginal of a pure two-qubit state.
/// Throws InvalidDensityMatrix for non-2x2 input.
Concurrence concurrence_pure(const qsim::DensityMatrix& rho_a);

/// Wootters concurrence of a general two-qubit state,
///   max(0, l1 - l2 - l3 - l4),
/// l_i the decreasing square roots of the eigenvalues of
/// sqrt(rho) (Y (x) Y) rho* (Y (x) Y) sqrt(rho).
/// Throws InvalidDensityMatrix for non-4x4 input.
Concurrence concurrence_wootters(const qsim::DensityMatrix& rho);

}  // namespace splitshower::entanglement
