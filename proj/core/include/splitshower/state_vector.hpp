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
#include <span>
#include <vector>

#include "splitshower/gate.hpp"

namespace splitshower::qsim {

class Circuit;

/// Dense amplitude vector over 1..8 qubits. Basis index bit k, counted from
/// the most significant end, is the state of wire k.
class StateVector {
 public:
  static constexpr int kMaxQubits = 8;

  /// |0...0> on n qubits.
  explicit StateVector(int n_qubits);

  static StateVector basis(int n_qubits, std::uint64_t index);

  /// Validates length and unit norm (within 1e-10).
  static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  std::vector<double> probabilities() const;

  friend StateVector apply(const StateVector& state, const GateOp& op);
  friend StateVector run(const Circuit& circuit, const StateVector& input);

 private:
  StateVector(int n_qubits, std::vector<Complex> amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  void apply_in_place(const GateOp& op);

  int n_qubits_;
  std::vector<Complex> amps_;
};

/// Returns the state with `op` applied on its wires. Throws WireOutOfRange.
StateVector apply(const StateVector& state, const GateOp& op);

}  // namespace splitshower::qsim
