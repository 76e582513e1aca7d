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

#include "photongate/dynamics/emission.hpp"

#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

namespace photongate::dynamics {

namespace odeint = boost::numeric::odeint;

namespace {

using Amplitudes = std::array<double, 2>;  // c_e0, c_g1 (real in this frame)

struct TwoLevel {
  double j;
  double kappa;
  void operator()(const Amplitudes& c, Amplitudes& dc, double) const {
    dc[0] = -j * c[1];
    dc[1] = j * c[0] - 0.5 * kappa * c[1];
  }
};

void advance(Amplitudes& c, double j, double kappa, double t0, double t1) {
  if (t1 <= t0) return;
  auto stepper = odeint::make_controlled(1e-12, 1e-10, odeint::runge_kutta_dopri5<Amplitudes>());
  odeint::integrate_adaptive(stepper, TwoLevel{j, kappa}, c, t0, t1, std::min(0.5, t1 - t0));
}

}  // namespace

pulse::TemporalMode rabi_emission_profile(const pulse::CouplingWaveform& coupling, double kappa) {
  if (!(kappa > 0.0)) throw DomainError("rabi_emission_profile: kappa must be positive");
  pulse::TemporalMode mode;
  mode.grid = coupling.grid;
  mode.samples.reserve(coupling.samples.size());
  Amplitudes c{1.0, 0.0};
  const double dt = coupling.grid.dt;
  const double sk = std::sqrt(kappa);
  for (int k = 0; k < coupling.grid.size; ++k) {
    const double a = coupling.grid.t0 + k * dt;
    const double j = coupling.samples[k];
    advance(c, j, kappa, a, a + 0.5 * dt);
    mode.samples.emplace_back(sk * c[1]);
    advance(c, j, kappa, a + 0.5 * dt, a + dt);
  }
  return mode;
}

std::vector<double> rabi_decay_population(double coupling, double kappa,
                                          const std::vector<double>& tau) {
  if (!(kappa >= 0.0)) throw DomainError("rabi_decay_population: kappa must be non-negative");
  std::vector<double> out;
  out.reserve(tau.size());
  for (double t : tau) {
    if (t < 0.0) throw DomainError("rabi_decay_population: negative time");
    Amplitudes c{1.0, 0.0};
    advance(c, coupling, kappa, 0.0, t);
    out.push_back(c[0] * c[0]);
  }
  return out;
}

}  // namespace photongate::dynamics
