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

#include "splitshower/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "splitshower/error.hpp"

namespace splitshower::qsim {

std::string bitstring(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int w = 0; w < n_qubits; ++w)
    if (index & (std::uint64_t{1} << (n_qubits - 1 - w))) s[w] = '1';
  return s;
}

std::vector<std::uint32_t> draw_outcomes(std::span<const double> probabilities, std::uint64_t shots,
                                         Rng& rng) {
  if (shots == 0) throw Error(ErrorCode::ZeroShots, "shots must be >= 1");
  std::vector<double> cdf(probabilities.size());
  std::partial_sum(probabilities.begin(), probabilities.end(), cdf.begin());
  const double total = cdf.back();
  std::vector<std::uint32_t> out;
  out.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform01() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // u * total can round up to total; fall back to the last nonzero entry.
    if (it == cdf.end()) it = std::lower_bound(cdf.begin(), cdf.end(), total);
    out.push_back(static_cast<std::uint32_t>(it - cdf.begin()));
  }
  return out;
}

Counts tally(std::span<const std::uint32_t> outcomes, int n_qubits) {
  std::map<std::uint32_t, std::uint64_t> by_index;
  for (auto o : outcomes) ++by_index[o];
  Counts counts;
  for (const auto& [idx, c] : by_index) counts.emplace(bitstring(idx, n_qubits), c);
  return counts;
}

Counts sample_shots(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorCode::ZeroShots, "shots must be >= 1");
  Rng rng(seed);
  const auto probs = state.probabilities();
  const auto outcomes = draw_outcomes(probs, shots, rng);
  return tally(outcomes, state.n_qubits());
}

std::uint64_t total_shots(const Counts& counts) {
  std::uint64_t n = 0;
  for (const auto& [_, c] : counts) n += c;
  return n;
}

}  // namespace splitshower::qsim
