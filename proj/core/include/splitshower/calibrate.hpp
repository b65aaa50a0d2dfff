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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "splitshower/splitter.hpp"

namespace splitshower::calibrate {

inline constexpr double kResidualTol = 1e-8;
inline constexpr double kBisectionWidth = 1e-12;

/// arccos(2(z - 1/2) / (sec(gamma1) - 2)) on [0, pi].
/// Throws ArccosDomain when the argument leaves [-1, 1].
double gamma3_of(double gamma1, double z);

/// Upper end of the feasible gamma1 interval, arccos(1 / (3 - 2z)).
double gamma1_upper(double z);

/// Concurrence-matching residual c_circuit(g1, gamma3_of(g1, z)) - c_qcd(z).
/// The circuit term is the signed square root of its radicand so that a
/// crossing of zero stays visible.
double matching_residual(double gamma1, double z);

struct CalibrationRecord {
  double z;
  splitter::SplittingParams params;
  double residual_z;
  double residual_c;
};

/// Smallest-gamma1 root of matching_residual on [0, gamma1_upper(z)].
/// Throws OutOfRange for z outside (0.5, 1] and CalibrationInfeasible when
/// no root is bracketed (always at z = 0.5).
splitter::SplittingParams solve_params(double z);

CalibrationRecord make_record(double z, const splitter::SplittingParams& params);

struct Rejection {
  std::size_t index;
  double z;
  std::string reason;
};

struct ParamDistribution {
  std::vector<CalibrationRecord> records;
  std::string source;
  std::vector<Rejection> rejected;
  std::size_t reflected = 0;  // inputs below 0.5 mapped to 1 - z
};

/// Solves every entry. Values in [0, 0.5) are reflected to 1 - z; failures
/// are listed in `rejected`. Throws EmptyDataset for an empty input.
ParamDistribution calibrate_dataset(std::span<const double> zs, std::string source = {});

}  // namespace splitshower::calibrate
