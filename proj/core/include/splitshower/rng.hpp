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
#include <random>

namespace splitshower {

/// Seedable generator used everywhere randomness enters the pipeline.
///
/// Algorithm: std::mt19937_64 (MT19937-64, fully specified by the C++
/// standard). Uniform doubles are built from the top 53 bits of one draw,
/// u = (x >> 11) * 2^-53, so results never depend on a standard library's
/// distribution implementation. Independent streams (one per run of a batch)
/// are seeded with splitmix64(seed, stream).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng stream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Uses rejection to avoid modulo bias.
  std::uint64_t below(std::uint64_t n);

  bool bernoulli(double p) { return uniform01() < p; }

  /// Standard normal via Box-Muller on uniform01 draws.
  double normal();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of the independent stream `stream_index` derived from `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream_index) noexcept;

}  // namespace splitshower
