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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "splitshower/rng.hpp"
#include "splitshower/state_vector.hpp"

namespace splitshower::qsim {

/// Outcome histogram keyed by bitstring, wire 0 first.
using Counts = std::map<std::string, std::uint64_t>;

std::string bitstring(std::uint64_t index, int n_qubits);

/// Draws `shots` basis indices from `probabilities` by inverse-CDF lookup on
/// Rng::uniform01. Probabilities need not be exactly normalized.
std::vector<std::uint32_t> draw_outcomes(std::span<const double> probabilities, std::uint64_t shots,
                                         Rng& rng);

Counts tally(std::span<const std::uint32_t> outcomes, int n_qubits);

/// Multinomial measurement of every wire. Deterministic for a fixed seed.
/// Throws ZeroShots.
Counts sample_shots(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

std::uint64_t total_shots(const Counts& counts);

}  // namespace splitshower::qsim
