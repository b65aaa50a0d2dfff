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

#include <vector>

#include "splitshower/gate.hpp"
#include "splitshower/state_vector.hpp"

namespace splitshower::qsim {

/// Ordered gate list on a fixed register plus the wires read out at the end.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  /// Validates wires against the register; throws WireOutOfRange/InvalidGate.
  Circuit& add(GateOp op);

  /// Distinct, in-range wires. Order is kept as given.
  Circuit& set_measured(std::vector<int> wires);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<GateOp>& ops() const noexcept { return ops_; }
  const std::vector<int>& measured_wires() const noexcept { return measured_; }
  std::size_t two_qubit_gate_count() const;

 private:
  int n_qubits_;
  std::vector<GateOp> ops_;
  std::vector<int> measured_;
};

/// Applies the ops in order. Throws DimensionMismatch if the input register
/// size differs from the circuit's.
StateVector run(const Circuit& circuit, const StateVector& input);

/// Runs on |0...0>.
StateVector run(const Circuit& circuit);

}  // namespace splitshower::qsim
