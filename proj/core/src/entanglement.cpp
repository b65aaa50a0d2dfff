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

#include "splitshower/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "splitshower/error.hpp"

namespace splitshower::entanglement {

namespace {

constexpr double kSlack = 1e-12;
constexpr double kNullEigenvalue = 1e-14;

}  // namespace

Concurrence::Concurrence(double value) {
  if (!std::isfinite(value) || value < -kSlack || value > 1.0 + kSlack) {
    throw Error(ErrorCode::OutOfRange, fmt::format("concurrence {:.17g}", value));
  }
  value_ = std::clamp(value, 0.0, 1.0);
}

Concurrence c_qcd(double z) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, fmt::format("z = {:.17g} not in [0, 1]", z));
  }
  const double w = z * (1.0 - z);
  const double r = w / (1.0 - w);
  return Concurrence(r * r);
}

double c_circuit_radicand(double gamma1, double gamma3) {
  const double sec1 = 1.0 / std::cos(gamma1);
  const double k = sec1 - 2.0;
  const double c3 = std::cos(gamma3);
  return 0.75 - 0.25 * k * k * c3 * c3 +
         0.5 * k / std::cos(gamma1) * (std::sin(gamma1) * std::sin(gamma3) + 1.0);
}

Concurrence c_circuit(double gamma1, double gamma3) {
  if (!(gamma1 >= -kSlack && gamma1 <= std::numbers::pi / 3.0 + kSlack)) {
    throw Error(ErrorCode::ParameterDomain,
                fmt::format("gamma1 = {:.17g} outside [0, pi/3]", gamma1));
  }
  const double radicand = c_circuit_radicand(gamma1, gamma3);
  return Concurrence(std::sqrt(std::max(radicand, 0.0)));
}

Concurrence concurrence_pure(const qsim::DensityMatrix& rho_a) {
  if (rho_a.n_qubits() != 1) {
    throw Error(ErrorCode::InvalidDensityMatrix,
                fmt::format("expected a one-qubit state, got {} qubits", rho_a.n_qubits()));
  }
  const double det = (rho_a(0, 0) * rho_a(1, 1) - rho_a(0, 1) * rho_a(1, 0)).real();
  return Concurrence(std::clamp(2.0 * std::sqrt(std::max(det, 0.0)), 0.0, 1.0));
}

Concurrence concurrence_wootters(const qsim::DensityMatrix& rho) {
  if (rho.n_qubits() != 2) {
    throw Error(ErrorCode::InvalidDensityMatrix,
                fmt::format("expected a two-qubit state, got {} qubits", rho.n_qubits()));
  }
  // rho = W W^H from the eigen-decomposition, dropping numerically-null
  // directions. The l_i are then the singular values of tau = W^T (Y (x) Y) W,
  // whose squares are the eigenvalues of sqrt(rho) rho~ sqrt(rho).
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix());
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) {
    const double ev = es.eigenvalues()(k);
    if (ev > kNullEigenvalue) w.col(k) = es.eigenvectors().col(k) * std::sqrt(ev);
  }

  // sigma_y (x) sigma_y is real: the anti-diagonal (-1, 1, 1, -1).
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;

  const Eigen::Matrix4cd tau = w.transpose() * yy * w;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
  Eigen::Vector4d lambda = svd.singularValues();
  std::sort(lambda.data(), lambda.data() + 4, std::greater<>());
  const double c = lambda(0) - lambda(1) - lambda(2) - lambda(3);
  return Concurrence(std::clamp(c, 0.0, 1.0));
}

}  // namespace splitshower::entanglement
