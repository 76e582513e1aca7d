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

#ifndef PHOTONGATE_PULSE_MODE_HPP
#define PHOTONGATE_PULSE_MODE_HPP

#include <iosfwd>
#include <vector>

#include "photongate/core/types.hpp"

namespace photongate::pulse {

/// Truncation of shaped pulses in units of 1/bandwidth, on each side.
inline constexpr double kDefaultTruncation = 4.6;

/// Uniform time grid: sample k covers [t0 + k dt, t0 + (k + 1) dt) and holds
/// the value at the interval midpoint.
struct TimeGrid {
  double t0 = 0.0;
  double dt = 1.0;
  int size = 0;

  double time(int k) const { return t0 + (k + 0.5) * dt; }
  double t_end() const { return t0 + size * dt; }
  double duration() const { return size * dt; }
  /// Index of the sample covering t, or -1 outside the grid.
  int index_at(double t) const;
};

/// Grid covering [center - half_width, center + half_width] with a step no
/// larger than max_dt, chosen so the window is covered exactly.
TimeGrid symmetric_grid(double center, double half_width, double max_dt);

/// Complex envelope of a photonic temporal mode, in units of 1/sqrt(ns).
struct TemporalMode {
  TimeGrid grid;
  std::vector<Complex> samples;
  double bandwidth = 0.0;  // rad/ns

  double norm_squared() const;
  Complex value_at(double t) const;
  /// Same samples on a grid shifted by `offset`.
  TemporalMode shifted(double offset) const;
  /// Zero-extends the mode by `extra` samples at the end.
  TemporalMode padded(int extra) const;
  /// Rescaled to unit squared norm.
  TemporalMode normalized() const;
};

/// Analytic sech envelope sqrt(gamma)/2 sech(gamma t / 2).
double sech_amplitude(double gamma, double t);
/// Integral of |sech_amplitude|^2 from -infinity to t.
double sech_cumulative(double gamma, double t);

/// Samples of the sech mode on [-t_cut, t_cut]. Rejects gamma * t_cut < 1.
TemporalMode sech_mode(double gamma, double dt, double t_cut);
/// Same, with the default truncation 4.6 / gamma.
TemporalMode sech_mode(double gamma, double dt);

/// <a|b> = sum conj(a) b dt over the overlapping part of two modes that
/// share a step (grids offset by a whole number of steps).
Complex mode_overlap(const TemporalMode& a, const TemporalMode& b);

/// Full width at half maximum of |xi|^2, by linear interpolation between samples.
double intensity_fwhm(const TemporalMode& mode);

/// CSV with header "t,re,im".
void write_csv(std::ostream& os, const TemporalMode& mode);

}  // namespace photongate::pulse

#endif  // PHOTONGATE_PULSE_MODE_HPP
