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

#include "splitshower/noise.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <variant>

#include <fmt/format.h>

#include "splitshower/detail/kernels.hpp"
#include "splitshower/error.hpp"
#include "splitshower/rng.hpp"
#include "splitshower/state_vector.hpp"

namespace splitshower::noise {

namespace {

void check_probability(double p, std::string_view name, double upper) {
  if (!(p >= 0.0 && p < upper)) {
    throw Error(ErrorCode::OutOfRange, fmt::format("{} = {} outside [0, {})", name, p, upper));
  }
}

// Value carried by every wire once the topology is read from its high sides.
std::vector<double> derived_wire_values(std::span<const double> high, const splitter::TopologyLayout& lay) {
  std::vector<double> on_wire(static_cast<std::size_t>(lay.n_qubits), 0.0);
  std::vector<std::array<double, 2>> node(lay.splits.size());
  for (std::size_t s = 0; s < lay.splits.size(); ++s) {
    const auto& sp = lay.splits[s];
    const double parent = sp.parent < 0 ? 1.0 : node[sp.parent][sp.parent_high ? 0 : 1];
    const double h = high[static_cast<std::size_t>(sp.high_wire)];
    node[s] = {h, parent - h};
    on_wire[sp.high_wire] = node[s][0];
    on_wire[sp.low_wire] = node[s][1];
  }
  return on_wire;
}

std::optional<splitter::ProngFractions> collect(const std::vector<double>& on_wire,
                                                const splitter::TopologyLayout& lay) {
  std::vector<double> finals, inter;
  for (int w : lay.final_wires) {
    if (on_wire[w] < 0.0) return std::nullopt;
    finals.push_back(on_wire[w]);
  }
  for (int w : lay.intermediate_wires) inter.push_back(on_wire[w]);
  return splitter::make_fractions(std::move(finals), lay.final_wires, std::move(inter));
}

}  // namespace

void NoiseModel::validate() const {
  check_probability(readout_p01, "readout_p01", 0.5);
  check_probability(readout_p10, "readout_p10", 0.5);
  check_probability(twoqubit_depol, "twoqubit_depol", 0.5);
}

void RunBatch::validate() const {
  if (runs < 1) throw Error(ErrorCode::OutOfRange, "runs must be >= 1");
  if (shots_per_run < 1) throw Error(ErrorCode::ZeroShots, "shots must be >= 1");
}

void depolarize(Eigen::MatrixXcd& rho, int n_qubits, int a, int b, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, fmt::format("depol = {}", p));
  if (p == 0.0) return;
  const std::size_t ma = qsim::detail::wire_mask(n_qubits, a);
  const std::size_t mb = qsim::detail::wire_mask(n_qubits, b);
  const std::size_t both = ma | mb;
  const std::size_t sub[4] = {0, mb, ma, ma | mb};
  const auto dim = static_cast<std::size_t>(rho.rows());
  Eigen::MatrixXcd out = (1.0 - p) * rho;
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & both) continue;
    for (std::size_t c = 0; c < dim; ++c) {
      if (c & both) continue;
      std::complex<double> tr = 0.0;
      for (auto k : sub) tr += rho(r | k, c | k);
      for (auto k : sub) out(r | k, c | k) += p * tr / 4.0;
    }
  }
  rho = std::move(out);
}

Eigen::MatrixXcd evolve_density(const qsim::Circuit& circuit, double twoqubit_depol) {
  const int n = circuit.n_qubits();
  if (n < 1 || n > qsim::StateVector::kMaxQubits) {
    throw Error(ErrorCode::TooManyQubits, fmt::format("{} qubits", n));
  }
  const auto dim = static_cast<Eigen::Index>(1) << n;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  rho(0, 0) = 1.0;
  // Column-major storage: the column index occupies the high n bits of the
  // doubled register, so wire w of the rows is wire n + w there.
  for (const auto& op : circuit.ops()) {
    const std::span<std::complex<double>> vec(rho.data(), static_cast<std::size_t>(dim * dim));
    if (const auto* g = std::get_if<qsim::SingleQubitGate>(&op)) {
      const Eigen::Matrix2cd m = qsim::base_matrix(g->kind);
      qsim::detail::apply_single(vec, 2 * n, n + g->wire, m);
      qsim::detail::apply_single(vec, 2 * n, g->wire, m.conjugate());
    } else {
      const auto& c = std::get<qsim::ControlledGate>(op);
      const Eigen::Matrix2cd m = qsim::base_matrix(c.base);
      qsim::detail::apply_controlled(vec, 2 * n, n + c.control, c.control_state, n + c.target, m);
      qsim::detail::apply_controlled(vec, 2 * n, c.control, c.control_state, c.target, m.conjugate());
      depolarize(rho, n, c.control, c.target, twoqubit_depol);
    }
  }
  return rho;
}

std::vector<double> noisy_probabilities(const qsim::Circuit& circuit, double twoqubit_depol) {
  const Eigen::MatrixXcd rho = evolve_density(circuit, twoqubit_depol);
  std::vector<double> p(static_cast<std::size_t>(rho.rows()));
  for (Eigen::Index i = 0; i < rho.rows(); ++i) p[static_cast<std::size_t>(i)] = std::max(0.0, rho(i, i).real());
  return p;
}

qsim::Counts sample_run(std::span<const double> probs, int n_qubits, const NoiseModel& model,
                        std::uint64_t shots, std::uint64_t run_seed) {
  Rng rng(run_seed);
  auto outcomes = qsim::draw_outcomes(probs, shots, rng);
  if (model.readout_p01 > 0.0 || model.readout_p10 > 0.0) {
    for (auto& o : outcomes) {
      for (int w = 0; w < n_qubits; ++w) {
        const auto mask = static_cast<std::uint32_t>(qsim::detail::wire_mask(n_qubits, w));
        const double flip = (o & mask) ? model.readout_p10 : model.readout_p01;
        if (rng.bernoulli(flip)) o ^= mask;
      }
    }
  }
  return qsim::tally(outcomes, n_qubits);
}

std::vector<qsim::Counts> noisy_sample(const qsim::Circuit& circuit, const NoiseModel& model,
                                       const RunBatch& batch) {
  model.validate();
  batch.validate();
  const auto probs = noisy_probabilities(circuit, model.twoqubit_depol);
  std::vector<qsim::Counts> out;
  out.reserve(batch.runs);
  for (std::uint64_t r = 0; r < batch.runs; ++r) {
    out.push_back(sample_run(probs, circuit.n_qubits(), model, batch.shots_per_run, stream_seed(batch.seed, r)));
  }
  return out;
}

WireEstimates estimate_wires(const qsim::Counts& counts, int n_qubits) {
  std::vector<std::uint64_t> zeros(static_cast<std::size_t>(n_qubits), 0);
  std::uint64_t shots = 0;
  for (const auto& [bits, c] : counts) {
    if (bits.size() != static_cast<std::size_t>(n_qubits)) {
      throw Error(ErrorCode::DimensionMismatch, fmt::format("bitstring '{}' for {} qubits", bits, n_qubits));
    }
    shots += c;
    for (int w = 0; w < n_qubits; ++w)
      if (bits[static_cast<std::size_t>(w)] == '0') zeros[static_cast<std::size_t>(w)] += c;
  }
  if (shots == 0) throw Error(ErrorCode::ZeroShots, "empty counts");
  WireEstimates e;
  e.shots = shots;
  for (auto z : zeros) {
    const double p0 = static_cast<double>(z) / static_cast<double>(shots);
    e.p0.push_back(p0);
    e.sigma3.push_back(2.0 * p0 - 1.0);
  }
  return e;
}

std::optional<splitter::ProngFractions> derive_fractions(const WireEstimates& w, splitter::TopologyKind kind) {
  const auto& lay = splitter::layout(kind);
  return collect(derived_wire_values(w.sigma3, lay), lay);
}

std::optional<splitter::ProngFractions> fractions_from_counts(const qsim::Counts& counts,
                                                              splitter::TopologyKind kind) {
  return derive_fractions(estimate_wires(counts, splitter::layout(kind).n_qubits), kind);
}

WireEstimates sigma_shift(WireEstimates w, splitter::TopologyKind kind) {
  const auto shots = static_cast<double>(w.shots);
  for (const auto& sp : splitter::layout(kind).splits) {
    const auto i = static_cast<std::size_t>(sp.high_wire);
    w.sigma3[i] += std::sqrt(w.p0[i] * (1.0 - w.p0[i]) / shots);
  }
  return w;
}

std::optional<splitter::ProngFractions> shifted_fractions(const qsim::Counts& counts,
                                                          splitter::TopologyKind kind) {
  const auto& lay = splitter::layout(kind);
  auto f = derive_fractions(sigma_shift(estimate_wires(counts, lay.n_qubits), kind), kind);
  if (!f) return f;
  const double total = f->sum();
  if (!(total > 0.0)) return std::nullopt;
  for (auto& v : f->final) v /= total;
  return f;
}

std::optional<splitter::ProngFractions> raw_mode(const qsim::Counts& counts, splitter::TopologyKind kind) {
  const auto& lay = splitter::layout(kind);
  return collect(estimate_wires(counts, lay.n_qubits).sigma3, lay);
}

std::string_view to_string(Postprocess p) noexcept {
  switch (p) {
    case Postprocess::Raw: return "raw";
    case Postprocess::Derived: return "derived";
    case Postprocess::Shifted: return "shifted";
  }
  return "unknown";
}

Postprocess parse_postprocess(std::string_view name) {
  if (name == "raw") return Postprocess::Raw;
  if (name == "derived") return Postprocess::Derived;
  if (name == "shifted") return Postprocess::Shifted;
  throw Error(ErrorCode::Parse, fmt::format("unknown postprocess mode '{}'", name));
}

std::optional<splitter::ProngFractions> postprocess(const qsim::Counts& counts, splitter::TopologyKind kind,
                                                    Postprocess mode) {
  switch (mode) {
    case Postprocess::Raw: return raw_mode(counts, kind);
    case Postprocess::Derived: return fractions_from_counts(counts, kind);
    case Postprocess::Shifted: return shifted_fractions(counts, kind);
  }
  return std::nullopt;
}

}  // namespace splitshower::noise
