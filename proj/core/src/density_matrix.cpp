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

#include "splitshower/density_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "splitshower/detail/kernels.hpp"
#include "splitshower/error.hpp"

namespace splitshower::qsim {

namespace {

void check_wire(int n_qubits, int wire) {
  if (wire < 0 || wire >= n_qubits) {
    throw Error(ErrorCode::WireOutOfRange, fmt::format("wire {} of {}", wire, n_qubits));
  }
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m) {
  const auto rows = static_cast<std::uint64_t>(m.rows());
  if (m.rows() != m.cols() || rows < 2 || !std::has_single_bit(rows)) {
    throw Error(ErrorCode::InvalidDensityMatrix,
                fmt::format("shape {}x{} is not 2^n x 2^n", m.rows(), m.cols()));
  }
  const int n = std::countr_zero(rows);
  if (n > StateVector::kMaxQubits) {
    throw Error(ErrorCode::InvalidDensityMatrix, fmt::format("{} qubits", n));
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw Error(ErrorCode::InvalidDensityMatrix, fmt::format("not Hermitian (max |A - A^H| = {:.3g})", herm));
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
    throw Error(ErrorCode::InvalidDensityMatrix,
                fmt::format("trace {:.17g}{:+.3g}i", tr.real(), tr.imag()));
  }
  DensityMatrix rho(n, std::move(m));
  const double lo = rho.min_eigenvalue();
  if (lo < -kEigenTol) {
    throw Error(ErrorCode::InvalidDensityMatrix, fmt::format("negative eigenvalue {:.3g}", lo));
  }
  return rho;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrix to_density(const StateVector& state) {
  const auto amps = state.amplitudes();
  const auto d = static_cast<Eigen::Index>(amps.size());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = amps[i] * std::conj(amps[j]);
  return DensityMatrix(state.n_qubits(), std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptyKeepSet, "keep set is empty");
  const int n = rho.n_qubits();
  for (int w : keep) check_wire(n, w);
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw Error(ErrorCode::WireOutOfRange, "duplicate wire in keep set");
  }
  std::vector<int> traced;
  for (int w = 0; w < n; ++w)
    if (!std::binary_search(keep.begin(), keep.end(), w)) traced.push_back(w);

  const int k = static_cast<int>(keep.size());
  const std::size_t kept_dim = std::size_t{1} << k;
  const std::size_t traced_dim = std::size_t{1} << traced.size();

  // Scatter the bits of a compact index onto the given wires of the full register.
  auto spread = [n](std::size_t compact, const std::vector<int>& wires) {
    std::size_t full = 0;
    const int m = static_cast<int>(wires.size());
    for (int b = 0; b < m; ++b)
      if (compact & (std::size_t{1} << (m - 1 - b))) full |= detail::wire_mask(n, wires[b]);
    return full;
  };
  std::vector<std::size_t> kept_part(kept_dim), traced_part(traced_dim);
  for (std::size_t i = 0; i < kept_dim; ++i) kept_part[i] = spread(i, keep);
  for (std::size_t r = 0; r < traced_dim; ++r) traced_part[r] = spread(r, traced);

  const auto& m = rho.matrix();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
  for (std::size_t i = 0; i < kept_dim; ++i)
    for (std::size_t j = 0; j < kept_dim; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t r = 0; r < traced_dim; ++r)
        acc += m(kept_part[i] | traced_part[r], kept_part[j] | traced_part[r]);
      out(i, j) = acc;
    }
  return DensityMatrix(k, std::move(out));
}

double expect_sigma3(const DensityMatrix& rho, int wire) {
  check_wire(rho.n_qubits(), wire);
  const std::size_t mask = detail::wire_mask(rho.n_qubits(), wire);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    const double p = rho(i, i).real();
    acc += (static_cast<std::size_t>(i) & mask) ? -p : p;
  }
  return acc;
}

double expect_sigma3(const StateVector& state, int wire) {
  check_wire(state.n_qubits(), wire);
  const std::size_t mask = detail::wire_mask(state.n_qubits(), wire);
  double acc = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    acc += (i & mask) ? -p : p;
  }
  return acc;
}

}  // namespace splitshower::qsim
