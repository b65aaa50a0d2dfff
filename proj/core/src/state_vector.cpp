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

#include "splitshower/state_vector.hpp"

#include <cmath>

#include <fmt/format.h>

#include "splitshower/detail/kernels.hpp"
#include "splitshower/error.hpp"

namespace splitshower::qsim {

namespace {

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > StateVector::kMaxQubits) {
    throw Error(ErrorCode::TooManyQubits,
                fmt::format("register of {} qubits outside 1..{}", n_qubits, StateVector::kMaxQubits));
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) {
    throw Error(ErrorCode::OutOfRange, fmt::format("basis index {} >= {}", index, s.dim()));
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Complex> amplitudes) {
  check_qubits(n_qubits);
  if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} amplitudes for {} qubits", amplitudes.size(), n_qubits));
  }
  StateVector s(n_qubits, std::move(amplitudes));
  if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidState, fmt::format("norm^2 = {:.17g}", s.norm_squared()));
  }
  return s;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return sum;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

void StateVector::apply_in_place(const GateOp& op) {
  validate(op, n_qubits_);
  if (const auto* g = std::get_if<SingleQubitGate>(&op)) {
    detail::apply_single(amps_, n_qubits_, g->wire, base_matrix(g->kind));
  } else {
    const auto& c = std::get<ControlledGate>(op);
    detail::apply_controlled(amps_, n_qubits_, c.control, c.control_state, c.target,
                             base_matrix(c.base));
  }
}

StateVector apply(const StateVector& state, const GateOp& op) {
  StateVector out = state;
  out.apply_in_place(op);
  return out;
}

}  // namespace splitshower::qsim
