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

#include "splitshower/circuit.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "splitshower/error.hpp"

namespace splitshower::qsim {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > StateVector::kMaxQubits) {
    throw Error(ErrorCode::TooManyQubits, fmt::format("circuit of {} qubits", n_qubits));
  }
}

Circuit& Circuit::add(GateOp op) {
  validate(op, n_qubits_);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::set_measured(std::vector<int> wires) {
  std::vector<int> seen;
  for (int w : wires) {
    if (w < 0 || w >= n_qubits_) {
      throw Error(ErrorCode::WireOutOfRange, fmt::format("measured wire {}", w));
    }
    if (std::find(seen.begin(), seen.end(), w) != seen.end()) {
      throw Error(ErrorCode::InvalidGate, fmt::format("wire {} measured twice", w));
    }
    seen.push_back(w);
  }
  measured_ = std::move(wires);
  return *this;
}

std::size_t Circuit::two_qubit_gate_count() const {
  return static_cast<std::size_t>(std::count_if(ops_.begin(), ops_.end(), is_two_qubit));
}

StateVector run(const Circuit& circuit, const StateVector& input) {
  if (input.n_qubits() != circuit.n_qubits()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("circuit has {} qubits, input state {}", circuit.n_qubits(),
                            input.n_qubits()));
  }
  StateVector state = input;
  for (const auto& op : circuit.ops()) state.apply_in_place(op);
  return state;
}

StateVector run(const Circuit& circuit) { return run(circuit, StateVector(circuit.n_qubits())); }

}  // namespace splitshower::qsim
