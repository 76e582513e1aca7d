// Copyright 2026 The photongate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photongate/tomography/reconstruct.hpp"

#include <Eigen/Eigenvalues>

namespace photongate::tomography {

namespace {

constexpr double kPhysicalTol = 1e-9;

/// Linear inversion over the operator basis (a^dag)^n a^m (b^dag)^p b^q with
/// exponents in {0, 1}; the mode dimensions are 2.
Matrix invert_single_rail(const MomentSet& moments, int modes) {
  const int d = modes == 1 ? 2 : 4;
  const Matrix a1 = dynamics::lowering_matrix(2);
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix a = modes == 1 ? a1 : core::tensor(a1, i2);
  const Matrix b = modes == 1 ? i2 : core::tensor(i2, a1);
  const Matrix id = Matrix::Identity(d, d);
  const int terms = d * d;
  Matrix system(terms, terms);
  Vector rhs(terms);
  int row = 0;
  for (int n = 0; n <= 1; ++n) {
    for (int m = 0; m <= 1; ++m) {
      for (int p = 0; p <= (modes == 2 ? 1 : 0); ++p) {
        for (int q = 0; q <= (modes == 2 ? 1 : 0); ++q) {
          const Matrix op = (n ? Matrix(a.adjoint()) : id) * (m ? a : id) *
                            (p ? Matrix(b.adjoint()) : id) * (q ? b : id);
          // Tr(op rho) = sum_ij op_ij rho_ji
          for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) system(row, j * d + i) = op(i, j);
          }
          rhs(row) = moments.get(n, m, p, q);
          ++row;
        }
      }
    }
  }
  const Vector x = system.fullPivLu().solve(rhs);
  Matrix rho(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) rho(j, i) = x(j * d + i);
  }
  return rho;
}

core::QuantumState finish(const Matrix& raw, std::vector<int> dims,
                          std::vector<std::string>* warnings) {
  const Matrix h = core::hermitian_part(raw);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.eigenvalues().minCoeff() < -kPhysicalTol && warnings) {
    warnings->push_back("reconstructed state had eigenvalue " +
                        std::to_string(es.eigenvalues().minCoeff()) +
                        "; projected onto the physical states");
  }
  return core::QuantumState(project_density_matrix(h), std::move(dims));
}

}  // namespace

Matrix project_density_matrix(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(core::hermitian_part(m));
  const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  const double total = ev.sum();
  if (!(total > 0.0)) throw NumericalError("density matrix has no positive part");
  Matrix out = es.eigenvectors() * (ev / total).asDiagonal() * es.eigenvectors().adjoint();
  return core::hermitian_part(out);
}

core::QuantumState reconstruct_qubit_state(const MomentSet& moments,
                                           std::vector<std::string>* warnings) {
  if (moments.modes != 1) throw DimensionError("reconstruct_qubit_state: expected one mode");
  return finish(invert_single_rail(moments, 1), {2}, warnings);
}

core::QuantumState reconstruct_two_mode_state(const MomentSet& moments,
                                              std::vector<std::string>* warnings) {
  if (moments.modes != 2) throw DimensionError("reconstruct_two_mode_state: expected two modes");
  return finish(invert_single_rail(moments, 2), {2, 2}, warnings);
}

}  // namespace photongate::tomography
