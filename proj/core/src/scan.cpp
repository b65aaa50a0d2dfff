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

#include <cmath>

#include "splitshower/calibrate.hpp"
#include "splitshower/entanglement.hpp"
#include "splitshower/splitter.hpp"

namespace splitshower::splitter {

std::vector<ScanPoint> composed_concurrence_scan(double z_first, std::span<const double> z_prime_grid) {
  const SplittingParams first = calibrate::solve_params(z_first);
  std::vector<ScanPoint> out;
  out.reserve(z_prime_grid.size());
  for (double zp : z_prime_grid) {
    const ShowerTopology topo{TopologyKind::ThreeDominant, {first, calibrate::solve_params(zp)}};
    const auto rho = qsim::partial_trace(qsim::to_density(qsim::run(build_topology(topo))), {0, 1});
    const double c = entanglement::concurrence_wootters(rho).value();
    const double cq = entanglement::c_qcd(zp).value();
    out.push_back({zp, c, cq, std::abs(c - cq) / cq});
  }
  return out;
}

}  // namespace splitshower::splitter
