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

#ifndef PHOTONGATE_PULSE_COUPLING_HPP
#define PHOTONGATE_PULSE_COUPLING_HPP

#include <iosfwd>
#include <string_view>
#include <vector>

#include "photongate/core/types.hpp"
#include "photongate/pulse/mode.hpp"

namespace photongate::pulse {

enum class Direction { Emit, Absorb };

std::string_view to_string(Direction d);
Direction parse_direction(std::string_view text);

/// Real, non-negative coupling rate J(t) in rad/ns on a uniform grid.
struct CouplingWaveform {
  TimeGrid grid;
  std::vector<double> samples;
  Direction direction = Direction::Emit;

  double value_at(double t) const;
  double peak() const;
  /// sum J^2 dt
  double energy() const;
  CouplingWaveform shifted(double offset) const;
};

/// Closed-form coupling that makes a converter with decay rate kappa emit a
/// sech photon of bandwidth gamma centred at t = 0. Requires 0 < gamma <= kappa.
double emission_coupling_rate(double gamma, double kappa, double t);

CouplingWaveform emission_coupling(double gamma, double kappa, double dt, double t_cut);
CouplingWaveform emission_coupling(double gamma, double kappa, double dt);

/// Time-reversed waveform J(-t) on the same window, direction flipped.
CouplingWaveform absorption_coupling(const CouplingWaveform& emit);

/// J(A) = c1 A + c2 A^2 for a normalized drive amplitude A in [0, 1].
class CouplerCalibration {
 public:
  CouplerCalibration(double linear, double quadratic);

  double linear() const { return linear_; }
  double quadratic() const { return quadratic_; }
  double max_coupling() const { return coupling_for_amplitude(1.0); }
  /// dJ/dA >= 0 on [0, 1] and J(1) > 0.
  bool is_monotone() const;

  double coupling_for_amplitude(double amplitude) const;
  double amplitude_for_coupling(double coupling) const;

 private:
  double linear_;
  double quadratic_;
};

/// DRAG envelope: Gaussian in-phase part with area theta (rad), quadrature
/// -drag_scale * d/dt of the in-phase part, rotated by the carrier phase phi.
/// Support is [-n_sigma sigma, n_sigma sigma] with the Gaussian offset to
/// vanish at the edges.
std::vector<Complex> drag_envelope(double theta, double phi, double sigma, double n_sigma,
                                   double dt = 1.0, double drag_scale = 0.0);

void write_csv(std::ostream& os, const CouplingWaveform& waveform);

}  // namespace photongate::pulse

#endif  // PHOTONGATE_PULSE_COUPLING_HPP
