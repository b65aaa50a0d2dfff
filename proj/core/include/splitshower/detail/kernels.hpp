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

// Raw amplitude kernels shared by the statevector engine and the vectorized
// density-matrix evolution in the noise module. Wire 0 is the most
// significant bit of the basis index.

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace splitshower::qsim::detail {

inline std::size_t wire_mask(int n_qubits, int wire) {
  return std::size_t{1} << (n_qubits - 1 - wire);
}

void apply_single(std::span<std::complex<double>> amps, int n_qubits, int wire,
                  const Eigen::Matrix2cd& m);

void apply_controlled(std::span<std::complex<double>> amps, int n_qubits, int control,
                      int control_state, int target, const Eigen::Matrix2cd& m);

}  // namespace splitshower::qsim::detail
