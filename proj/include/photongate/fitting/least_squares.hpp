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

#ifndef PHOTONGATE_FITTING_LEAST_SQUARES_HPP
#define PHOTONGATE_FITTING_LEAST_SQUARES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "photongate/core/types.hpp"

namespace photongate::fitting {

using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Parameter estimates of a fit. Covariance is the Gauss-Newton estimate
/// s^2 (J^T J)^-1 with s^2 = |r|^2 / (m - n).
struct FitResult {
  std::vector<std::string> names;
  std::vector<std::string> units;
  RealVector values;
  RealMatrix covariance;
  double residual_norm = 0.0;
  bool converged = false;
  int evaluations = 0;
  std::vector<std::string> warnings;

  double value(const std::string& name) const;
  double standard_error(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// Residual vector r(p); the fit minimizes |r|^2.
using ResidualFunction = std::function<RealVector(const RealVector&)>;

struct LeastSquaresOptions {
  int starts = 5;            // first start is the given guess
  double spread = 0.3;       // relative perturbation of later starts
  std::uint64_t seed = 7;    // perturbations are deterministic
  int max_evaluations = 20000;
  double tolerance = 1e-12;  // relative f and x tolerance
};

/// Levenberg-Marquardt with forward-difference Jacobian from several starting
/// points; returns the start with the smallest residual. Throws DomainError on
/// shape mismatches and NumericalError if no start yields a finite residual.
FitResult least_squares(const ResidualFunction& residual, int n_residuals,
                        const RealVector& initial, std::vector<std::string> names,
                        std::vector<std::string> units, const LeastSquaresOptions& options = {});

/// Forward-difference Jacobian of `residual` at p.
RealMatrix numerical_jacobian(const ResidualFunction& residual, const RealVector& p,
                              const RealVector& r0);

}  // namespace photongate::fitting

#endif  // PHOTONGATE_FITTING_LEAST_SQUARES_HPP
