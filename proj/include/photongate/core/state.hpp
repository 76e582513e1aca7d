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

#ifndef PHOTONGATE_CORE_STATE_HPP
#define PHOTONGATE_CORE_STATE_HPP

#include <span>
#include <string>
#include <vector>

#include "photongate/core/types.hpp"

namespace photongate::core {

/// Tolerances of the density-matrix invariants.
struct StateTolerance {
  double hermiticity = 1e-10;
  double trace = 1e-8;
  double min_eigenvalue = -1e-8;
};

/// Density matrix on a composite Hilbert space.
///
/// Construction only checks structure (square matrix, subsystem dimensions
/// multiplying to the matrix size). Physicality is checked on demand with
/// validate(), since integrator output and reconstructed states are allowed
/// to violate it slightly before projection.
class QuantumState {
 public:
  QuantumState(Matrix matrix, std::vector<int> subsystem_dims);
  /// Single subsystem of the matrix dimension.
  explicit QuantumState(Matrix matrix);

  static QuantumState pure(const Vector& psi, std::vector<int> subsystem_dims);
  /// |index><index| in a space with the given subsystem dimensions.
  static QuantumState basis(std::span<const int> levels, std::vector<int> subsystem_dims);

  const Matrix& matrix() const { return matrix_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  double hermiticity_error() const;
  double trace_deviation() const;
  double min_eigenvalue() const;
  bool is_valid(const StateTolerance& tol = {}) const;
  /// Throws DomainError naming the violated invariant.
  void validate(const StateTolerance& tol = {}) const;

  /// Expectation value Tr(op rho).
  Complex expect(const Matrix& op) const;

 private:
  Matrix matrix_;
  std::vector<int> dims_;
};

/// Kronecker product of the factors, leftmost factor most significant.
Matrix tensor(std::span<const Matrix> factors);
QuantumState tensor(std::span<const QuantumState> factors);

inline Matrix tensor(const Matrix& a, const Matrix& b) {
  const Matrix f[] = {a, b};
  return tensor(std::span<const Matrix>(f));
}

/// Reduced state on the subsystems listed in keep (kept in increasing order).
QuantumState partial_trace(const QuantumState& state, std::vector<int> keep);

/// Lifts an operator acting on subsystem `index` to the full space.
Matrix embed(const Matrix& op, std::span<const int> dims, int index);

/// Set of Kraus operators; the channel rho -> sum_i K_i rho K_i^dagger.
class KrausChannel {
 public:
  KrausChannel(std::vector<Matrix> operators, std::string label);

  const std::vector<Matrix>& operators() const { return ops_; }
  const std::string& label() const { return label_; }
  int dim() const { return static_cast<int>(ops_.front().rows()); }

  /// Largest entry of sum K^dagger K - identity.
  double completeness_error() const;
  bool is_trace_preserving(double tol = 1e-10) const;

 private:
  std::vector<Matrix> ops_;
  std::string label_;
};

/// Photon-loss channel with transmission probability eta on a single rail:
/// K0 = |0><0| + sqrt(eta)|1><1|, K1 = sqrt(1 - eta)|0><1|.
KrausChannel loss_channel(double eta);

/// Applies a channel acting on the whole space.
QuantumState apply_channel(const QuantumState& state, const KrausChannel& channel);
/// Applies a channel to one subsystem, identity elsewhere.
QuantumState apply_channel(const QuantumState& state, const KrausChannel& channel, int subsystem);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double state_fidelity(const QuantumState& rho, const QuantumState& sigma);

/// Hermitian part (M + M^dagger) / 2.
Matrix hermitian_part(const Matrix& m);
/// Square root of a Hermitian positive semidefinite matrix; negative
/// eigenvalues are clipped to zero.
Matrix sqrt_psd(const Matrix& m);
/// Uhlmann fidelity on raw PSD matrices, without normalization or checks.
double uhlmann_fidelity(const Matrix& a, const Matrix& b);

}  // namespace photongate::core

#endif  // PHOTONGATE_CORE_STATE_HPP
