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

#ifndef PHOTONGATE_TOMOGRAPHY_RECONSTRUCT_HPP
#define PHOTONGATE_TOMOGRAPHY_RECONSTRUCT_HPP

#include <string>
#include <vector>

#include "photongate/core/state.hpp"
#include "photongate/tomography/moments.hpp"

namespace photongate::tomography {

// Single-rail convention: <a> = rho_10, the coherence from |1> to |0>.

/// 2x2 state from <a> and <a^dag a>, projected onto the physical states.
/// Unphysical moments append a message to `warnings` when given.
core::QuantumState reconstruct_qubit_state(const MomentSet& moments,
                                           std::vector<std::string>* warnings = nullptr);

/// 4x4 state of two single-rail modes (first mode most significant) by linear
/// inversion of the moments with n, m, p, q in {0, 1}, then projection.
core::QuantumState reconstruct_two_mode_state(const MomentSet& moments,
                                              std::vector<std::string>* warnings = nullptr);

/// Hermitian part with negative eigenvalues clipped and trace set to one.
Matrix project_density_matrix(const Matrix& m);

}  // namespace photongate::tomography

#endif  // PHOTONGATE_TOMOGRAPHY_RECONSTRUCT_HPP
