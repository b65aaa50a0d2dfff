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

#include "splitshower/gate.hpp"

#include <cmath>

#include <fmt/format.h>

#include "splitshower/error.hpp"

namespace splitshower::qsim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

std::string describe_kind(const SingleQubitKind& kind) {
  return std::visit(Overloaded{
                        [](const RY& g) { return fmt::format("RY({:.6g})", g.angle); },
                        [](const U3& g) {
                          return fmt::format("U3({:.6g},{:.6g},{:.6g})", g.theta, g.phi, g.lambda);
                        },
                        [](const PauliX&) { return std::string("X"); },
                    },
                    kind);
}

}  // namespace

GateOp ry(int wire, double angle) { return SingleQubitGate{RY{angle}, wire}; }

GateOp u3(int wire, double theta, double phi, double lambda) {
  return SingleQubitGate{U3{theta, phi, lambda}, wire};
}

GateOp x(int wire) { return SingleQubitGate{PauliX{}, wire}; }

GateOp cnot(int control, int target) { return ControlledGate{PauliX{}, control, target, 1}; }

GateOp controlled(SingleQubitKind base, int control, int target, int control_state) {
  return ControlledGate{base, control, target, control_state};
}

Eigen::Matrix2cd base_matrix(const SingleQubitKind& kind) {
  return std::visit(
      Overloaded{
          [](const RY& g) {
            const double c = std::cos(g.angle / 2.0);
            const double s = std::sin(g.angle / 2.0);
            Eigen::Matrix2cd m;
            m << c, -s, s, c;
            return m;
          },
          [](const U3& g) {
            const double c = std::cos(g.theta / 2.0);
            const double s = std::sin(g.theta / 2.0);
            const Complex i{0.0, 1.0};
            Eigen::Matrix2cd m;
            m << c, -std::exp(i * g.lambda) * s, std::exp(i * g.phi) * s,
                std::exp(i * (g.phi + g.lambda)) * c;
            return m;
          },
          [](const PauliX&) {
            Eigen::Matrix2cd m;
            m << 0.0, 1.0, 1.0, 0.0;
            return m;
          },
      },
      kind);
}

Eigen::MatrixXcd gate_matrix(const GateOp& op) {
  return std::visit(
      Overloaded{
          [](const SingleQubitGate& g) -> Eigen::MatrixXcd { return base_matrix(g.kind); },
          [](const ControlledGate& g) -> Eigen::MatrixXcd {
            const Eigen::Matrix2cd u = base_matrix(g.base);
            Eigen::Matrix2cd p0 = Eigen::Matrix2cd::Zero();
            Eigen::Matrix2cd p1 = Eigen::Matrix2cd::Zero();
            p0(0, 0) = 1.0;
            p1(1, 1) = 1.0;
            const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
            // C-U = |0><0| (x) I + |1><1| (x) U
            Eigen::Matrix4cd cu =
                kron(p0, id) + kron(p1, u);
            if (g.control_state == 1) return cu;
            // Open control realized as (X (x) I) C-U (X (x) I).
            Eigen::Matrix2cd xm;
            xm << 0.0, 1.0, 1.0, 0.0;
            const Eigen::Matrix4cd flip = kron(xm, id);
            return flip * cu * flip;
          },
      },
      op);
}

std::vector<int> gate_wires(const GateOp& op) {
  return std::visit(Overloaded{
                        [](const SingleQubitGate& g) { return std::vector<int>{g.wire}; },
                        [](const ControlledGate& g) { return std::vector<int>{g.control, g.target}; },
                    },
                    op);
}

bool is_two_qubit(const GateOp& op) { return std::holds_alternative<ControlledGate>(op); }

void validate(const GateOp& op, int n_qubits) {
  for (int w : gate_wires(op)) {
    if (w < 0 || w >= n_qubits) {
      throw Error(ErrorCode::WireOutOfRange,
                  fmt::format("wire {} outside register of {} qubits", w, n_qubits));
    }
  }
  if (const auto* c = std::get_if<ControlledGate>(&op)) {
    if (c->control == c->target) {
      throw Error(ErrorCode::InvalidGate, fmt::format("control equals target ({})", c->control));
    }
    if (c->control_state != 0 && c->control_state != 1) {
      throw Error(ErrorCode::InvalidGate,
                  fmt::format("control_state must be 0 or 1, got {}", c->control_state));
    }
  }
}

std::string describe(const GateOp& op) {
  return std::visit(Overloaded{
                        [](const SingleQubitGate& g) {
                          return fmt::format("{} q{}", describe_kind(g.kind), g.wire);
                        },
                        [](const ControlledGate& g) {
                          return fmt::format("C{}[{}] q{} -> q{}", g.control_state == 0 ? "o" : "",
                                             describe_kind(g.base), g.control, g.target);
                        },
                    },
                    op);
}

}  // namespace splitshower::qsim
