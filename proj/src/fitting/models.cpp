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

#include "photongate/fitting/models.hpp"

#include <cmath>
#include <complex>

namespace photongate::fitting {

double lorentzian_s21(double delta, double s0, double kappa, double center) {
  const double u = 2.0 * (delta - center) / kappa;
  return std::abs(s0) / std::sqrt(1.0 + u * u);
}

double mollow_pp(double x, double omega, double kappa) {
  const double k2 = kappa * kappa;
  const double o2 = omega * omega;
  const double a = 5.0 * k2 + 8.0 * x * x - 8.0 * o2;
  return a * a - 9.0 * k2 * (k2 - 16.0 * o2);
}

double mollow_psd(double delta, double p0, double omega, double kappa, double f0) {
  const double x = delta - f0;
  const double k2 = kappa * kappa;
  const double o2 = omega * omega;
  const double num = 64.0 * kappa * o2 * o2 * (2.0 * k2 + 2.0 * x * x + o2);
  const double den = kPi * (k2 + 4.0 * x * x) * (k2 + 2.0 * o2) * mollow_pp(x, omega, kappa);
  return p0 * kappa * num / den;
}

double gaussian_peak(double x, double base, double amplitude, double center, double width) {
  const double u = (x - center) / width;
  return base + amplitude * std::exp(-0.5 * u * u);
}

double rabi_decay(double tau, double j, double kappa) {
  // c_e(t) = e^{-kappa t/4} (cos wt + (kappa/4) sin(wt)/w), w^2 = j^2 - kappa^2/16
  const std::complex<double> w = std::sqrt(std::complex<double>(j * j - kappa * kappa / 16.0));
  const std::complex<double> wt = w * tau;
  std::complex<double> sinc_t;
  if (std::abs(wt) < 1e-4) {
    sinc_t = tau * (1.0 - wt * wt / 6.0);
  } else {
    sinc_t = std::sin(wt) / w;
  }
  const std::complex<double> ce =
      std::exp(-0.25 * kappa * tau) * (std::cos(wt) + 0.25 * kappa * sinc_t);
  return std::norm(ce);
}

void add_noise(RealVector& y, double sigma, std::mt19937_64& rng) {
  std::normal_distribution<double> noise(0.0, sigma);
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) += noise(rng);
}

}  // namespace photongate::fitting
