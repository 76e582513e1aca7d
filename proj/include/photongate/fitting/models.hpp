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

#ifndef PHOTONGATE_FITTING_MODELS_HPP
#define PHOTONGATE_FITTING_MODELS_HPP

#include <random>

#include "photongate/fitting/least_squares.hpp"

namespace photongate::fitting {

// Frequencies in this module are f/2pi in MHz, times in ns.

/// |S21| = |S0 / (1 + 2i (delta - center) / kappa)|.
double lorentzian_s21(double delta, double s0, double kappa, double center);

/// Product p+ p- written as the real polynomial A^2 - 9 kappa^2 (kappa^2 - 16 Omega^2),
/// A = 5 kappa^2 + 8 x^2 - 8 Omega^2, x = delta - f0. Valid on both sides of Omega = kappa/4.
double mollow_pp(double x, double omega, double kappa);

/// Resonance-fluorescence power spectral density of a driven two-level system.
double mollow_psd(double delta, double p0, double omega, double kappa, double f0);

/// base + amplitude exp(-(x - center)^2 / (2 width^2)).
double gaussian_peak(double x, double base, double amplitude, double center, double width);

/// |e0> population of the damped swap {|e0>, |g1>} with |g1> decaying at kappa,
/// for swap rate j. Closed form from lambda^2 + (kappa/2) lambda + j^2 = 0 with
/// the rates in rad/ns.
double rabi_decay(double tau, double j, double kappa);

/// Adds N(0, sigma^2) to every entry.
void add_noise(RealVector& y, double sigma, std::mt19937_64& rng);

}  // namespace photongate::fitting

#endif  // PHOTONGATE_FITTING_MODELS_HPP
