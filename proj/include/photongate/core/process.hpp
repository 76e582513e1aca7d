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

#ifndef PHOTONGATE_CORE_PROCESS_HPP
#define PHOTONGATE_CORE_PROCESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "photongate/core/types.hpp"

namespace photongate::core {

/// Gates of the photonic gate set.
enum class GateLabel { I, X, Y, T, CPHASE };

std::string_view to_string(GateLabel g);
std::optional<GateLabel> parse_gate_label(std::string_view text);
int gate_qubits(GateLabel g);

/// Process matrix chi in the n-qubit Pauli basis.
///
/// The basis is (I, X, Y, Z) per qubit, ordered tensor-lexicographically with
/// qubit 0 as the leftmost factor, and E(rho) = sum_mn chi_mn P_m rho P_n^dagger
/// with unnormalized Paulis, so a trace-preserving process has Tr chi = 1.
class ProcessMap {
 public:
  ProcessMap(Matrix chi, int n_qubits);

  const Matrix& chi() const { return chi_; }
  int n_qubits() const { return n_qubits_; }

  /// Applies the process to a 2^n dimensional operator.
  Matrix apply(const Matrix& rho) const;

 private:
  Matrix chi_;
  int n_qubits_;
};

/// The 4^n Pauli operators in basis order.
const std::vector<Matrix>& pauli_basis(int n_qubits);

/// Rank-one chi of a unitary: chi = v v^dagger, v_m = Tr(P_m^dagger U) / 2^n.
ProcessMap process_from_unitary(const Matrix& unitary);

Matrix gate_unitary(GateLabel g);
ProcessMap ideal_process(GateLabel g);

/// Nearest PSD matrix in Frobenius norm (eigenvalue clipping of the
/// Hermitian part), renormalized to unit trace.
ProcessMap project_psd(const Matrix& matrix);
/// Frobenius distance between the Hermitian part of `matrix` and its PSD
/// projection, before trace renormalization.
double psd_projection_distance(const Matrix& matrix);

/// Uhlmann fidelity between process matrices.
double process_fidelity(const ProcessMap& a, const ProcessMap& b);

}  // namespace photongate::core

#endif  // PHOTONGATE_CORE_PROCESS_HPP
