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

#include "photongate/pulse/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace photongate::pulse {

std::string_view to_string(Direction d) { return d == Direction::Emit ? "emit" : "absorb"; }

Direction parse_direction(std::string_view text) {
  if (text == "emit") return Direction::Emit;
  if (text == "absorb") return Direction::Absorb;
  throw DomainError("unknown coupling direction '" + std::string(text) + "'");
}

double CouplingWaveform::value_at(double t) const {
  const int k = grid.index_at(t);
  return k < 0 ? 0.0 : samples[static_cast<std::size_t>(k)];
}

double CouplingWaveform::peak() const {
  return samples.empty() ? 0.0 : *std::max_element(samples.begin(), samples.end());
}

double CouplingWaveform::energy() const {
  double sum = 0.0;
  for (double j : samples) sum += j * j;
  return sum * grid.dt;
}

CouplingWaveform CouplingWaveform::shifted(double offset) const {
  CouplingWaveform out = *this;
  out.grid.t0 += offset;
  return out;
}

double emission_coupling_rate(double gamma, double kappa, double t) {
  if (!(gamma > 0.0) || !(kappa > 0.0)) {
    throw DomainError("emission coupling: rates must be positive");
  }
  if (gamma > kappa * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "emission coupling: photon bandwidth " << gamma
        << " rad/ns exceeds the converter decay rate " << kappa
        << " rad/ns; the bandwidth is bound by kappa";
    throw DomainError(msg.str());
  }
  const double r = std::max(kappa / gamma, 1.0);
  if (t < 0.0) {
    const double u = std::exp(gamma * t);
    const double num = gamma * (1.0 - u + r * (1.0 + u));
    return num / (4.0 * std::cosh(0.5 * gamma * t) * std::sqrt((1.0 + u) * r - u));
  }
  // Same expression divided through by e^{gamma t}, stable for large t.
  const double w = std::exp(-gamma * t);
  const double num = (gamma + kappa) * w + (kappa - gamma);
  return num / (2.0 * (1.0 + w) * std::sqrt(r * w + r - 1.0));
}

CouplingWaveform emission_coupling(double gamma, double kappa, double dt, double t_cut) {
  if (!(gamma > 0.0)) throw DomainError("emission coupling: bandwidth must be positive");
  if (gamma * t_cut < 1.0) {
    throw DomainError("emission coupling: truncation gamma * t_cut < 1 cuts most of the pulse");
  }
  CouplingWaveform w;
  w.grid = symmetric_grid(0.0, t_cut, dt);
  w.direction = Direction::Emit;
  w.samples.reserve(static_cast<std::size_t>(w.grid.size));
  for (int k = 0; k < w.grid.size; ++k) {
    const double j = emission_coupling_rate(gamma, kappa, w.grid.time(k));
    if (!std::isfinite(j) || j < 0.0) {
      throw NumericalError("emission coupling: non-finite or negative sample");
    }
    w.samples.push_back(j);
  }
  return w;
}

CouplingWaveform emission_coupling(double gamma, double kappa, double dt) {
  if (!(gamma > 0.0)) throw DomainError("emission coupling: bandwidth must be positive");
  return emission_coupling(gamma, kappa, dt, kDefaultTruncation / gamma);
}

CouplingWaveform absorption_coupling(const CouplingWaveform& emit) {
  CouplingWaveform out = emit;
  std::reverse(out.samples.begin(), out.samples.end());
  out.direction = emit.direction == Direction::Emit ? Direction::Absorb : Direction::Emit;
  return out;
}

CouplerCalibration::CouplerCalibration(double linear, double quadratic)
    : linear_(linear), quadratic_(quadratic) {
  if (!std::isfinite(linear) || !std::isfinite(quadratic)) {
    throw DomainError("coupler calibration: coefficients must be finite");
  }
}

bool CouplerCalibration::is_monotone() const {
  return linear_ >= 0.0 && linear_ + 2.0 * quadratic_ >= 0.0 && max_coupling() > 0.0;
}

double CouplerCalibration::coupling_for_amplitude(double amplitude) const {
  if (!(amplitude >= 0.0 && amplitude <= 1.0)) {
    throw DomainError("coupler calibration: amplitude must lie in [0, 1]");
  }
  return amplitude * (linear_ + quadratic_ * amplitude);
}

double CouplerCalibration::amplitude_for_coupling(double coupling) const {
  if (!is_monotone()) throw DomainError("coupler calibration: map is not monotone on [0, 1]");
  const double j_max = max_coupling();
  if (coupling < 0.0) throw DomainError("coupler calibration: coupling must be non-negative");
  if (coupling > j_max * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "coupler calibration: coupling " << coupling
        << " rad/ns exceeds the calibrated maximum " << j_max << " rad/ns";
    throw DomainError(msg.str());
  }
  // Root of c2 A^2 + c1 A - J = 0 in the cancellation-free form.
  const double disc = linear_ * linear_ + 4.0 * quadratic_ * coupling;
  const double denom = linear_ + std::sqrt(std::max(disc, 0.0));
  if (denom <= 0.0) return 0.0;
  return std::min(1.0, 2.0 * coupling / denom);
}

std::vector<Complex> drag_envelope(double theta, double phi, double sigma, double n_sigma,
                                   double dt, double drag_scale) {
  if (!(sigma > 0.0)) throw DomainError("drag envelope: sigma must be positive");
  if (!(n_sigma > 0.0)) throw DomainError("drag envelope: n_sigma must be positive");
  if (!(dt > 0.0)) throw DomainError("drag envelope: time step must be positive");
  const TimeGrid grid = symmetric_grid(0.0, n_sigma * sigma, dt);
  const double edge = std::exp(-0.5 * n_sigma * n_sigma);
  std::vector<double> in_phase(static_cast<std::size_t>(grid.size));
  std::vector<double> slope(in_phase.size());
  double area = 0.0;
  for (int k = 0; k < grid.size; ++k) {
    const double t = grid.time(k);
    const double g = std::exp(-0.5 * t * t / (sigma * sigma));
    in_phase[k] = g - edge;
    slope[k] = -t / (sigma * sigma) * g;
    area += in_phase[k] * grid.dt;
  }
  const double scale = theta / area;
  const Complex carrier = std::polar(1.0, phi);
  std::vector<Complex> out(in_phase.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = carrier * Complex(scale * in_phase[k], -drag_scale * scale * slope[k]);
  }
  return out;
}

void write_csv(std::ostream& os, const CouplingWaveform& waveform) {
  os << "t,value\n" << std::setprecision(17);
  for (int k = 0; k < waveform.grid.size; ++k) {
    os << waveform.grid.time(k) << ',' << waveform.samples[k] << '\n';
  }
}

}  // namespace photongate::pulse
