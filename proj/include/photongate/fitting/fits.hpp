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

#ifndef PHOTONGATE_FITTING_FITS_HPP
#define PHOTONGATE_FITTING_FITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "photongate/fitting/least_squares.hpp"
#include "photongate/pulse/coupling.hpp"

namespace photongate::fitting {

/// Parameters S0, kappa [MHz], center [MHz] of |S21| data versus probe detuning.
FitResult fit_lorentzian(const RealVector& delta, const RealVector& s21,
                         const LeastSquaresOptions& options = {});

struct MollowTrace {
  RealVector delta;  // MHz from the drive
  RealVector psd;
};

struct MollowDeviceFit {
  FitResult fit;  // P0, kappa, f0, Omega_0, Omega_1, ...
  double p0 = 0.0;
  double kappa = 0.0;
  double f0 = 0.0;
  std::vector<double> omega;
};

/// Joint fit of one device's traces: shared P0, kappa and f0, one Omega per trace.
MollowDeviceFit fit_mollow(const std::vector<MollowTrace>& traces, double kappa_guess,
                           const LeastSquaresOptions& options = {});

struct LinkEfficiencyFit {
  MollowDeviceFit source;
  MollowDeviceFit gate;
  double eta = 0.0;  // P0_source / P0_gate
};

LinkEfficiencyFit fit_link_efficiency(const std::vector<MollowTrace>& source,
                                      double source_kappa_guess,
                                      const std::vector<MollowTrace>& gate, double gate_kappa_guess,
                                      const LeastSquaresOptions& options = {});

struct ChevronFit {
  FitResult fit;  // base, amplitude, center, width
  double center = 0.0;
  double width = 0.0;
  bool rejected = false;
  std::string reason;
};

/// Constant plus Gaussian fit to a single dip or peak. Flat or unresolved
/// data set `rejected` instead of throwing.
ChevronFit fit_chevron(const RealVector& detuning, const RealVector& population,
                       const LeastSquaresOptions& options = {});

/// J and kappa (f/2pi in MHz) from |e0> population versus pulse length tau [ns].
/// With `fixed_kappa` set only J is fitted. `j_guess` defaults to a value read
/// off the first population minimum.
FitResult fit_rabi_decay(const RealVector& tau, const RealVector& population,
                         std::optional<double> fixed_kappa = std::nullopt,
                         std::optional<double> j_guess = std::nullopt,
                         double kappa_guess = 2.0, const LeastSquaresOptions& options = {});

struct CalibrationFit {
  pulse::CouplerCalibration calibration{0.0, 0.0};
  FitResult fit;  // linear, quadratic
  bool monotone = false;
};

/// J(A) = c1 A + c2 A^2 through the origin by linear least squares; needs at
/// least three points. A non-monotone result adds a warning.
CalibrationFit fit_coupling_vs_amplitude(const RealVector& amplitude, const RealVector& coupling);

}  // namespace photongate::fitting

#endif  // PHOTONGATE_FITTING_FITS_HPP
