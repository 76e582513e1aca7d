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

#ifndef PHOTONGATE_TOMOGRAPHY_MOMENTS_HPP
#define PHOTONGATE_TOMOGRAPHY_MOMENTS_HPP

#include <array>
#include <map>
#include <string>

#include "photongate/core/state.hpp"
#include "photongate/dynamics/evolve.hpp"

namespace photongate::tomography {

/// Exponents (n, m, p, q) of <(a^dag)^n a^m (b^dag)^p b^q>.
using MomentKey = std::array<int, 4>;

/// Normally ordered field moments of one or two modes. Single-mode sets use
/// n + m <= 4; two-mode sets use n + m <= 2 and p + q <= 2.
struct MomentSet {
  int modes = 1;
  std::string reference;
  std::map<MomentKey, Complex> values;

  Complex get(int n, int m) const { return get(n, m, 0, 0); }
  Complex get(int n, int m, int p, int q) const;
  void set(int n, int m, int p, int q, Complex value) { values[{n, m, p, q}] = value; }

  /// <a^dag a> (and <b^dag b>) real and >= -tol, <a> = conj(<a^dag>).
  bool is_physical(double tol = 1e-6) const;
};

/// Moments of a field state with dims {d} or {d1, d2}.
MomentSet moments_of_state(const core::QuantumState& field, std::string reference = "");

/// Moments of the photon captured by the virtual detector at the end of a
/// trajectory. Rejects trajectories that end before the reference window or
/// lack a detector.
MomentSet extract_moments(const dynamics::TrajectoryResult& trajectory,
                          const dynamics::ReferenceMode& reference);

/// Divides every moment by n_ref^{(n + m + p + q) / 2}, n_ref being <a^dag a>
/// of the reference photon.
MomentSet normalize_moments(const MomentSet& moments, double reference_number);
/// Two-mode version with separate reference numbers for the a and b modes.
MomentSet normalize_moments(const MomentSet& moments, double reference_a, double reference_b);

/// Multiplies every moment by eta^{(n + m + p + q) / 2} (loss on all modes).
MomentSet attenuate_moments(const MomentSet& moments, double eta);

}  // namespace photongate::tomography

#endif  // PHOTONGATE_TOMOGRAPHY_MOMENTS_HPP
