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
#include <vector>

#include <benchmark/benchmark.h>

#include "splitshower/calibrate.hpp"
#include "splitshower/circuit.hpp"
#include "splitshower/jets.hpp"
#include "splitshower/noise.hpp"
#include "splitshower/rng.hpp"
#include "splitshower/sampling.hpp"
#include "splitshower/splitter.hpp"

namespace ss = splitshower;

namespace {

std::vector<ss::jets::PseudoJet> event(std::size_t n, std::uint64_t seed) {
  ss::Rng rng(seed);
  std::vector<ss::jets::PseudoJet> v;
  for (std::size_t i = 0; i < n; ++i) {
    const double pt = 1.0 + 99.0 * rng.uniform01(), y = 4.0 * rng.uniform01() - 2.0;
    const double phi = 6.283185307179586 * rng.uniform01();
    v.emplace_back(pt * std::cos(phi), pt * std::sin(phi), pt * std::sinh(y), pt * std::cosh(y));
  }
  return v;
}

ss::splitter::ShowerTopology topology(ss::splitter::TopologyKind kind) {
  std::vector<ss::splitter::SplittingParams> p;
  for (std::size_t i = 0; i < ss::splitter::splitting_count(kind); ++i) p.push_back(ss::calibrate::solve_params(0.8));
  return {kind, p};
}

void BM_ClusterAntiKt(benchmark::State& state) {
  const auto v = event(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ss::jets::cluster(v, {}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClusterAntiKt)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_ClusterCamAachen(benchmark::State& state) {
  const auto v = event(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ss::jets::cluster(v, {ss::jets::Algorithm::CamAachen, 0.4}));
}
BENCHMARK(BM_ClusterCamAachen)->RangeMultiplier(4)->Range(16, 256);

void BM_SolveParams(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(ss::calibrate::solve_params(z));
}
BENCHMARK(BM_SolveParams)->Arg(600)->Arg(800)->Arg(990);

void BM_ExactShower(benchmark::State& state) {
  const auto t = topology(static_cast<ss::splitter::TopologyKind>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ss::qsim::run(ss::splitter::build_topology(t)));
}
BENCHMARK(BM_ExactShower)->DenseRange(0, 4);

void BM_SampleShots(benchmark::State& state) {
  const auto psi = ss::qsim::run(ss::splitter::build_topology(topology(ss::splitter::TopologyKind::FourDominant)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ss::qsim::sample_shots(psi, 1024, seed++));
}
BENCHMARK(BM_SampleShots);

void BM_NoisyProbabilities(benchmark::State& state) {
  const auto c = ss::splitter::build_topology(topology(static_cast<ss::splitter::TopologyKind>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ss::noise::noisy_probabilities(c, 0.01));
}
BENCHMARK(BM_NoisyProbabilities)->Arg(1)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
