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

#include "photongate/pulse/mode.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace photongate::pulse {

int TimeGrid::index_at(double t) const {
  if (size <= 0 || t < t0 || t >= t_end()) return -1;
  const int k = static_cast<int>(std::floor((t - t0) / dt));
  return k < size ? k : size - 1;
}

TimeGrid symmetric_grid(double center, double half_width, double max_dt) {
  if (!(max_dt > 0.0)) throw DomainError("time step must be positive");
  if (!(half_width > 0.0)) throw DomainError("window half width must be positive");
  const int n = static_cast<int>(std::ceil(2.0 * half_width / max_dt - 1e-9));
  return TimeGrid{center - half_width, 2.0 * half_width / n, n};
}

double TemporalMode::norm_squared() const {
  double sum = 0.0;
  for (const auto& s : samples) sum += std::norm(s);
  return sum * grid.dt;
}

Complex TemporalMode::value_at(double t) const {
  const int k = grid.index_at(t);
  return k < 0 ? Complex{} : samples[static_cast<std::size_t>(k)];
}

TemporalMode TemporalMode::shifted(double offset) const {
  TemporalMode out = *this;
  out.grid.t0 += offset;
  return out;
}

TemporalMode TemporalMode::padded(int extra) const {
  TemporalMode out = *this;
  out.samples.resize(samples.size() + static_cast<std::size_t>(extra), Complex{});
  out.grid.size += extra;
  return out;
}

TemporalMode TemporalMode::normalized() const {
  const double n = norm_squared();
  if (!(n > 0.0)) throw DomainError("cannot normalize an empty mode");
  TemporalMode out = *this;
  for (auto& s : out.samples) s /= std::sqrt(n);
  return out;
}

double sech_amplitude(double gamma, double t) {
  return 0.5 * std::sqrt(gamma) / std::cosh(0.5 * gamma * t);
}

double sech_cumulative(double gamma, double t) {
  return 0.5 * (1.0 + std::tanh(0.5 * gamma * t));
}

TemporalMode sech_mode(double gamma, double dt, double t_cut) {
  if (!(gamma > 0.0)) throw DomainError("sech_mode: bandwidth must be positive");
  if (!(dt > 0.0)) throw DomainError("sech_mode: time step must be positive");
  if (!(t_cut > 0.0)) throw DomainError("sech_mode: truncation must be positive");
  if (gamma * t_cut < 1.0) {
    throw DomainError("sech_mode: truncation gamma * t_cut < 1 cuts most of the mode");
  }
  TemporalMode mode;
  mode.grid = symmetric_grid(0.0, t_cut, dt);
  mode.bandwidth = gamma;
  mode.samples.reserve(static_cast<std::size_t>(mode.grid.size));
  for (int k = 0; k < mode.grid.size; ++k) {
    mode.samples.emplace_back(sech_amplitude(gamma, mode.grid.time(k)));
  }
  return mode;
}

TemporalMode sech_mode(double gamma, double dt) {
  if (!(gamma > 0.0)) throw DomainError("sech_mode: bandwidth must be positive");
  return sech_mode(gamma, dt, kDefaultTruncation / gamma);
}

Complex mode_overlap(const TemporalMode& a, const TemporalMode& b) {
  const double dt = a.grid.dt;
  if (std::abs(dt - b.grid.dt) > 1e-9 * dt) {
    throw DimensionError("mode_overlap: modes use different time steps");
  }
  const double shift = (b.grid.t0 - a.grid.t0) / dt;
  const long offset = std::lround(shift);
  if (std::abs(shift - double(offset)) > 1e-6) {
    throw DimensionError("mode_overlap: grids are not aligned");
  }
  Complex sum{};
  for (int k = 0; k < a.grid.size; ++k) {
    const long kb = k - offset;
    if (kb < 0 || kb >= b.grid.size) continue;
    sum += std::conj(a.samples[std::size_t(k)]) * b.samples[std::size_t(kb)];
  }
  return sum * dt;
}

double intensity_fwhm(const TemporalMode& mode) {
  const int n = mode.grid.size;
  if (n < 3) throw DomainError("intensity_fwhm: mode too short");
  int peak = 0;
  for (int k = 1; k < n; ++k) {
    if (std::norm(mode.samples[k]) > std::norm(mode.samples[peak])) peak = k;
  }
  const double half = 0.5 * std::norm(mode.samples[peak]);
  auto crossing = [&](int step) {
    int k = peak;
    while (k + step >= 0 && k + step < n && std::norm(mode.samples[k + step]) > half) k += step;
    if (k + step < 0 || k + step >= n) throw DomainError("intensity_fwhm: half maximum not reached");
    const double y0 = std::norm(mode.samples[k]);
    const double y1 = std::norm(mode.samples[k + step]);
    const double frac = (y0 - half) / (y0 - y1);
    return mode.grid.time(k) + step * frac * mode.grid.dt;
  };
  return crossing(+1) - crossing(-1);
}

void write_csv(std::ostream& os, const TemporalMode& mode) {
  os << "t,re,im\n" << std::setprecision(17);
  for (int k = 0; k < mode.grid.size; ++k) {
    os << mode.grid.time(k) << ',' << mode.samples[k].real() << ',' << mode.samples[k].imag()
       << '\n';
  }
}

}  // namespace photongate::pulse
