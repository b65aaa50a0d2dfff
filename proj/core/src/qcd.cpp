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

#include "splitshower/qcd.hpp"

#include <array>

#include <fmt/format.h>

#include "splitshower/error.hpp"

namespace splitshower::qcd {

namespace {

void require_open_unit(double z) {
  if (!(z > 0.0 && z < 1.0)) {
    throw Error(ErrorCode::OutOfRange, fmt::format("z = {:.17g} not in (0, 1)", z));
  }
}

}  // namespace

double p_gg(double z) {
  if (z == 0.0 || z == 1.0) {
    throw Error(ErrorCode::DivergentEndpoint, fmt::format("P_gg diverges at z = {}", z));
  }
  if (!(z > 0.0 && z < 1.0)) {
    throw Error(ErrorCode::OutOfRange, fmt::format("z = {:.17g} not in (0, 1)", z));
  }
  const double zb = 1.0 - z;
  return kCA * (z / zb + zb / z + z * zb);
}

double HelicityAmplitudes::sum_squared_per_initial() const {
  return l_to_ll * l_to_ll + l_to_lr * l_to_lr + l_to_rl * l_to_rl;
}

HelicityAmplitudes helicity_amplitudes(double z) {
  require_open_unit(z);
  const double zb = 1.0 - z;
  HelicityAmplitudes a;
  a.z = z;
  a.l_to_ll = 1.0;
  a.l_to_lr = z * z;
  a.l_to_rl = zb * zb;
  a.r_to_rr = a.l_to_ll;
  a.r_to_rl = a.l_to_lr;
  a.r_to_lr = a.l_to_rl;
  return a;
}

qsim::DensityMatrix SpinDensity::to_density() const {
  return qsim::DensityMatrix::from_matrix(matrix.cast<qsim::Complex>());
}

SpinDensity rho_sc(double z) {
  require_open_unit(z);
  const double zb = 1.0 - z;
  const double a = z * z;
  const double b = zb * zb;
  const double d = a * a + b * b;
  const double norm = 1.0 / (2.0 * (d + 1.0));
  SpinDensity s;
  s.z = z;
  // clang-format off
  s.matrix << 1.0,       a,   b,           0.0,
              a,         d,   2.0 * a * b, b,
              b,   2.0 * a * b, d,         a,
              0.0,       b,   a,           1.0;
  // clang-format on
  s.matrix *= norm;
  return s;
}

SpinDensity rho_sc_from_amplitudes(const HelicityAmplitudes& amps) {
  // Final-state ordering LL, LR, RL, RR.
  const Eigen::Vector4d from_left(amps.l_to_ll, amps.l_to_lr, amps.l_to_rl, 0.0);
  const Eigen::Vector4d from_right(0.0, amps.r_to_lr, amps.r_to_rl, amps.r_to_rr);
  Eigen::Matrix4d r = from_left * from_left.transpose() + from_right * from_right.transpose();
  SpinDensity s;
  s.z = amps.z;
  s.matrix = r / r.trace();
  return s;
}

double amplitude_ratio_check(double z) {
  const HelicityAmplitudes a = helicity_amplitudes(z);
  const double averaged = a.sum_squared_per_initial() / (z * (1.0 - z));
  return averaged / (p_gg(z) / kCA);
}

}  // namespace splitshower::qcd
