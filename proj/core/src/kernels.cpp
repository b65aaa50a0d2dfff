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

#include "splitshower/detail/kernels.hpp"

namespace splitshower::qsim::detail {

void apply_single(std::span<std::complex<double>> amps, int n_qubits, int wire,
                  const Eigen::Matrix2cd& m) {
  const std::size_t mask = wire_mask(n_qubits, wire);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const std::complex<double> a0 = amps[i];
    const std::complex<double> a1 = amps[i | mask];
    amps[i] = m(0, 0) * a0 + m(0, 1) * a1;
    amps[i | mask] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

void apply_controlled(std::span<std::complex<double>> amps, int n_qubits, int control,
                      int control_state, int target, const Eigen::Matrix2cd& m) {
  const std::size_t cmask = wire_mask(n_qubits, control);
  const std::size_t tmask = wire_mask(n_qubits, target);
  const std::size_t want = control_state ? cmask : 0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & tmask) || (i & cmask) != want) continue;
    const std::complex<double> a0 = amps[i];
    const std::complex<double> a1 = amps[i | tmask];
    amps[i] = m(0, 0) * a0 + m(0, 1) * a1;
    amps[i | tmask] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

}  // namespace splitshower::qsim::detail
