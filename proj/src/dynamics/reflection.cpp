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

#include "photongate/dynamics/reflection.hpp"

#include <cmath>

#include <unsupported/Eigen/FFT>

namespace photongate::dynamics {

Complex reflection_coefficient(double kappa, double g, GateState state, double delta) {
  if (!(kappa > 0.0)) throw DomainError("reflection: kappa must be positive");
  const Complex id = kI * delta;
  if (state == GateState::Ground || g == 0.0) {
    return (-0.5 * kappa - id) / (0.5 * kappa - id);
  }
  return 1.0 - kappa * (-id) / (-id * 0.5 * kappa - delta * delta + g * g);
}

std::vector<Complex> reflection_spectrum(double kappa, double g, GateState state,
                                         const std::vector<double>& delta) {
  std::vector<Complex> out;
  out.reserve(delta.size());
  for (double d : delta) out.push_back(reflection_coefficient(kappa, g, state, d));
  return out;
}

std::vector<double> fft_frequencies(int n, double dt) {
  if (n <= 0 || !(dt > 0.0)) throw DomainError("fft_frequencies: bad grid");
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int kk = k <= n / 2 ? k : k - n;
    w[k] = kTwoPi * kk / (n * dt);
  }
  return w;
}

pulse::TemporalMode reflect_mode(const pulse::TemporalMode& mode,
                                 const std::function<Complex(double)>& s11, int pad_factor) {
  if (pad_factor < 1) throw DomainError("reflect_mode: pad factor must be >= 1");
  if (mode.grid.size == 0) throw DomainError("reflect_mode: empty mode");
  const pulse::TemporalMode padded = mode.padded(mode.grid.size * (pad_factor - 1));
  const int n = padded.grid.size;
  Eigen::FFT<double> fft;
  std::vector<Complex> spectrum;
  fft.fwd(spectrum, padded.samples);
  // Synthesis uses exp(+i w t), i.e. field detuning delta = -w.
  const auto w = fft_frequencies(n, padded.grid.dt);
  for (int k = 0; k < n; ++k) spectrum[k] *= s11(-w[k]);
  pulse::TemporalMode out = padded;
  fft.inv(out.samples, spectrum);
  return out;
}

pulse::TemporalMode reflect_mode(const pulse::TemporalMode& mode, double kappa, double g,
                                 GateState state, int pad_factor) {
  return reflect_mode(
      mode, [=](double delta) { return reflection_coefficient(kappa, g, state, delta); },
      pad_factor);
}

}  // namespace photongate::dynamics
