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

#include "photongate/fitting/least_squares.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <unsupported/Eigen/NonLinearOptimization>

namespace photongate::fitting {

namespace {

struct Functor {
  using Scalar = double;
  using InputType = RealVector;
  using ValueType = RealVector;
  using JacobianType = RealMatrix;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const ResidualFunction* fn;
  int n_in;
  int n_out;
  mutable int calls = 0;

  int inputs() const { return n_in; }
  int values() const { return n_out; }

  int operator()(const RealVector& p, RealVector& r) const {
    ++calls;
    r = (*fn)(p);
    if (r.size() != n_out) return -1;
    if (!r.allFinite()) r.setConstant(1e150);
    return 0;
  }

  int df(const RealVector& p, RealMatrix& jac) const {
    RealVector r0;
    (*this)(p, r0);
    jac = numerical_jacobian(*fn, p, r0);
    calls += static_cast<int>(p.size());
    return 0;
  }
};

double step_for(double x) {
  return std::sqrt(std::numeric_limits<double>::epsilon()) * std::max(std::abs(x), 1e-8);
}

}  // namespace

RealMatrix numerical_jacobian(const ResidualFunction& residual, const RealVector& p,
                              const RealVector& r0) {
  RealMatrix jac(r0.size(), p.size());
  RealVector q = p;
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    const double h = step_for(p(j));
    q(j) = p(j) + h;
    RealVector r1 = residual(q);
    if (!r1.allFinite()) {
      q(j) = p(j) - h;
      r1 = residual(q);
      jac.col(j) = (r0 - r1) / h;
    } else {
      jac.col(j) = (r1 - r0) / h;
    }
    q(j) = p(j);
  }
  return jac;
}

double FitResult::value(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return values(static_cast<Eigen::Index>(i));
  }
  throw DomainError("fit result has no parameter '" + name + "'");
}

double FitResult::standard_error(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    if (names[i] == name) return std::sqrt(std::max(covariance(k, k), 0.0));
  }
  throw DomainError("fit result has no parameter '" + name + "'");
}

nlohmann::json FitResult::to_json() const {
  nlohmann::json params = nlohmann::json::array();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    params.push_back({{"name", names[i]},
                      {"unit", i < units.size() ? units[i] : ""},
                      {"value", values(k)},
                      {"stderr", std::sqrt(std::max(covariance(k, k), 0.0))}});
  }
  return {{"parameters", params},
          {"residual_norm", residual_norm},
          {"converged", converged},
          {"evaluations", evaluations},
          {"warnings", warnings}};
}

FitResult least_squares(const ResidualFunction& residual, int n_residuals,
                        const RealVector& initial, std::vector<std::string> names,
                        std::vector<std::string> units, const LeastSquaresOptions& options) {
  const int n = static_cast<int>(initial.size());
  if (n == 0) throw DomainError("least_squares: no parameters");
  if (static_cast<int>(names.size()) != n) {
    throw DomainError("least_squares: one name per parameter required");
  }
  if (n_residuals < n) {
    throw DomainError("least_squares: " + std::to_string(n_residuals) +
                      " residuals cannot determine " + std::to_string(n) + " parameters");
  }
  if (options.starts < 1) throw DomainError("least_squares: need at least one start");

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Functor functor{&residual, n, n_residuals};

  RealVector best;
  double best_norm = std::numeric_limits<double>::infinity();
  bool best_converged = false;
  for (int s = 0; s < options.starts; ++s) {
    RealVector p = initial;
    if (s > 0) {
      for (int j = 0; j < n; ++j) p(j) *= 1.0 + options.spread * unit(rng);
    }
    Eigen::LevenbergMarquardt<Functor> lm(functor);
    lm.parameters.maxfev = options.max_evaluations;
    lm.parameters.ftol = options.tolerance;
    lm.parameters.xtol = options.tolerance;
    const auto status = lm.minimize(p);
    RealVector r;
    if (functor(p, r) != 0) continue;
    const double norm = r.norm();
    if (!std::isfinite(norm) || norm >= 1e140) continue;
    const bool ok = status == Eigen::LevenbergMarquardtSpace::RelativeReductionTooSmall ||
                    status == Eigen::LevenbergMarquardtSpace::RelativeErrorTooSmall ||
                    status == Eigen::LevenbergMarquardtSpace::RelativeErrorAndReductionTooSmall ||
                    status == Eigen::LevenbergMarquardtSpace::CosinusTooSmall ||
                    status == Eigen::LevenbergMarquardtSpace::FtolTooSmall ||
                    status == Eigen::LevenbergMarquardtSpace::XtolTooSmall ||
                    status == Eigen::LevenbergMarquardtSpace::GtolTooSmall;
    if (norm < best_norm) {
      best_norm = norm;
      best = p;
      best_converged = ok;
    }
  }
  if (!std::isfinite(best_norm)) {
    throw NumericalError("least_squares: no start produced a finite residual");
  }

  FitResult out;
  out.names = std::move(names);
  out.units = std::move(units);
  out.units.resize(out.names.size());
  out.values = best;
  out.residual_norm = best_norm;
  out.evaluations = functor.calls;
  const RealVector r0 = residual(best);
  const RealMatrix jac = numerical_jacobian(residual, best, r0);
  const RealMatrix jtj = jac.transpose() * jac;
  Eigen::FullPivLU<RealMatrix> lu(jtj);
  const int dof = n_residuals - n;
  if (lu.rank() < n) {
    out.covariance = RealMatrix::Constant(n, n, std::numeric_limits<double>::infinity());
    out.warnings.push_back("Jacobian is rank deficient; parameters are not all identified");
    out.converged = false;
  } else {
    const double s2 = dof > 0 ? best_norm * best_norm / dof : 0.0;
    out.covariance = s2 * lu.inverse();
    out.converged = best_converged && out.covariance.allFinite();
  }
  if (!out.converged && out.warnings.empty()) {
    out.warnings.push_back("optimizer stopped before convergence (residual " +
                           std::to_string(best_norm) + ")");
  }
  return out;
}

}  // namespace photongate::fitting
