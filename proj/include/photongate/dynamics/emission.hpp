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

#ifndef PHOTONGATE_DYNAMICS_EMISSION_HPP
#define PHOTONGATE_DYNAMICS_EMISSION_HPP

#include <vector>

#include "photongate/pulse/coupling.hpp"
#include "photongate/pulse/mode.hpp"

namespace photongate::dynamics {

/// Field emitted by the two-level {|e0>, |g1>} model driven by J(t), with
/// |g1> decaying at kappa. Starts in |e0>; returns sqrt(kappa) c_g1(t) at
/// the waveform sample midpoints.
pulse::TemporalMode rabi_emission_profile(const pulse::CouplingWaveform& coupling, double kappa);

/// Population of |e0> at times tau for a constant swap rate J, starting in
/// |e0>, by direct integration. Reference for the closed-form fit model.
std::vector<double> rabi_decay_population(double coupling, double kappa,
                                          const std::vector<double>& tau);

}  // namespace photongate::dynamics

#endif  // PHOTONGATE_DYNAMICS_EMISSION_HPP
