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

#include <Eigen/Dense>

#include "splitshower/density_matrix.hpp"

namespace splitshower::qcd {

/// Adjoint Casimir of SU(3).
inline constexpr double kCA = 3.0;

/// Unregularized g -> gg splitting function
///   C_A (z/(1-z) + (1-z)/z + z(1-z)).
/// Throws DivergentEndpoint at z in {0, 1}, OutOfRange outside [0, 1].
double p_gg(double z);

/// Tree-level g -> gg helicity amplitudes with the common prefactor
/// sqrt(2) g f^{abc} E theta stripped. Parity partners (L <-> R everywhere)
/// carry the same values.
struct HelicityAmplitudes {
  double z = 0.0;
  double l_to_ll = 0.0;
  double l_to_lr = 0.0;
  double l_to_rl = 0.0;
  double r_to_rr = 0.0;
  double r_to_rl = 0.0;
  double r_to_lr = 0.0;

  /// Sum of |M|^2 over final helicities for one initial helicity:
  /// 1 + z^4 + (1-z)^4.
  double sum_squared_per_initial() const;
};

/// Throws OutOfRange unless 0 < z < 1.
HelicityAmplitudes helicity_amplitudes(double z);

/// Normalized spin density matrix of the outgoing gluon pair, basis
/// |LL>, |LR>, |RL>, |RR> = |00>, |01>, |10>, |11>.
struct SpinDensity {
  double z = 0.0;
  Eigen::Matrix4d matrix;

  qsim::DensityMatrix to_density() const;
};

/// Closed form. Throws OutOfRange unless 0 < z < 1.
SpinDensity rho_sc(double z);

/// Same matrix assembled as (1/N) sum_{initial helicity} M M^T from the
/// amplitudes, i.e. the helicity-summed R-matrix normalized to unit trace.
SpinDensity rho_sc_from_amplitudes(const HelicityAmplitudes& amps);

/// (1 + z^4 + (1-z)^4) / (z(1-z)) divided by p_gg(z)/C_A. The averaged
/// squared amplitude is proportional to the splitting function, so this is
/// the constant 2 for every z in (0, 1). Throws OutOfRange.
double amplitude_ratio_check(double z);

}  // namespace splitshower::qcd
