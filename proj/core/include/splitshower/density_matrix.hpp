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

#include <vector>

#include <Eigen/Dense>

#include "splitshower/state_vector.hpp"

namespace splitshower::qsim {

/// Hermitian, unit-trace, positive semidefinite matrix over n qubits, in the
/// same wire ordering as StateVector.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kEigenTol = 1e-10;

  /// Validates shape, hermiticity, trace and spectrum. Throws
  /// InvalidDensityMatrix.
  static DensityMatrix from_matrix(Eigen::MatrixXcd m);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  Complex trace() const { return m_.trace(); }
  double min_eigenvalue() const;

  friend DensityMatrix to_density(const StateVector& state);
  friend DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);

 private:
  DensityMatrix(int n_qubits, Eigen::MatrixXcd m) : n_qubits_(n_qubits), m_(std::move(m)) {}

  int n_qubits_;
  Eigen::MatrixXcd m_;
};

/// |psi><psi|.
DensityMatrix to_density(const StateVector& state);

/// Reduced state on `keep` (any order, returned in ascending wire order).
/// Throws EmptyKeepSet or WireOutOfRange.
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);

/// Tr(sigma_3 rho_wire). Throws WireOutOfRange.
double expect_sigma3(const DensityMatrix& rho, int wire);
double expect_sigma3(const StateVector& state, int wire);

}  // namespace splitshower::qsim
