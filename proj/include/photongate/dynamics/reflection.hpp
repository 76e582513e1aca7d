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

#ifndef PHOTONGATE_DYNAMICS_REFLECTION_HPP
#define PHOTONGATE_DYNAMICS_REFLECTION_HPP

#include <functional>
#include <vector>

#include "photongate/pulse/mode.hpp"

namespace photongate::dynamics {

enum class GateState { Ground, Excited };

/// Reflection coefficient of the gate converter (decay kappa) at detuning
/// delta (rad/ns) while the |f0> <-> |e1> drive of rate g is on. Field
/// convention exp(-i delta t).
Complex reflection_coefficient(double kappa, double g, GateState state, double delta);
std::vector<Complex> reflection_spectrum(double kappa, double g, GateState state,
                                         const std::vector<double>& delta);

/// Angular frequencies of an n-point FFT with step dt, in FFT order.
std::vector<double> fft_frequencies(int n, double dt);

/// Output mode inverse_fft(S11 * fft(xi)) on a grid zero-padded to
/// pad_factor times the input length (same t0 and dt).
pulse::TemporalMode reflect_mode(const pulse::TemporalMode& mode,
                                 const std::function<Complex(double)>& s11, int pad_factor = 4);
pulse::TemporalMode reflect_mode(const pulse::TemporalMode& mode, double kappa, double g,
                                 GateState state, int pad_factor = 4);

}  // namespace photongate::dynamics

#endif  // PHOTONGATE_DYNAMICS_REFLECTION_HPP
