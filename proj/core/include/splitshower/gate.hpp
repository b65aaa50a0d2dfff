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

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace splitshower::qsim {

using Complex = std::complex<double>;

/// Rotation about the Bloch-sphere y axis, exp(-i angle Y / 2).
struct RY {
  double angle = 0.0;
};

/// Generic single-qubit rotation
///   [[cos(t/2),           -e^{i l} sin(t/2)      ],
///    [e^{i p} sin(t/2),    e^{i(p+l)} cos(t/2)   ]].
struct U3 {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
};

struct PauliX {};

using SingleQubitKind = std::variant<RY, U3, PauliX>;

struct SingleQubitGate {
  SingleQubitKind kind;
  int wire = 0;
};

/// Applies `base` to `target` when `control` is in |control_state>.
/// control_state = 0 is the open-dot (anti-control) variant.
struct ControlledGate {
  SingleQubitKind base;
  int control = 0;
  int target = 1;
  int control_state = 1;
};

using GateOp = std::variant<SingleQubitGate, ControlledGate>;

GateOp ry(int wire, double angle);
GateOp u3(int wire, double theta, double phi, double lambda);
GateOp x(int wire);
GateOp cnot(int control, int target);
GateOp controlled(SingleQubitKind base, int control, int target, int control_state = 1);

Eigen::Matrix2cd base_matrix(const SingleQubitKind& kind);

/// 2x2 for single-qubit ops; 4x4 for controlled ops in the |control, target>
/// basis with the control as the more significant bit.
Eigen::MatrixXcd gate_matrix(const GateOp& op);

/// Wires touched by the op, control first for controlled ops.
std::vector<int> gate_wires(const GateOp& op);

bool is_two_qubit(const GateOp& op);

/// Throws Error(InvalidGate / WireOutOfRange) if the op cannot act on a
/// register of n_qubits.
void validate(const GateOp& op, int n_qubits);

std::string describe(const GateOp& op);

}  // namespace splitshower::qsim
