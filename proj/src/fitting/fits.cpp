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

#include "photongate/fitting/fits.hpp"

#include <algorithm>
#include <cmath>

#include "photongate/fitting/models.hpp"

namespace photongate::fitting {

namespace {

void check_xy(const RealVector& x, const RealVector& y, int min_points, const char* what) {
  if (x.size() != y.size()) throw DomainError(std::string(what) + ": x and y differ in length");
  if (x.size() < min_points) {
    throw DomainError(std::string(what) + ": need at least " + std::to_string(min_points) +
                      " points");
  }
  if (!x.allFinite() || !y.allFinite()) throw DomainError(std::string(what) + ": non-finite data");
}

Eigen::Index argmax(const RealVector& y) {
  Eigen::Index k = 0;
  y.maxCoeff(&k);
  return k;
}

}  // namespace

FitResult fit_lorentzian(const RealVector& delta, const RealVector& s21,
                         const LeastSquaresOptions& options) {
  check_xy(delta, s21, 4, "fit_lorentzian");
  const Eigen::Index k = argmax(s21);
  const double s0 = s21(k);
  double lo = delta(k);
  double hi = delta(k);
  for (Eigen::Index i = 0; i < delta.size(); ++i) {
    if (s21(i) >= s0 / std::sqrt(2.0)) {
      lo = std::min(lo, delta(i));
      hi = std::max(hi, delta(i));
    }
  }
  const double span = delta.maxCoeff() - delta.minCoeff();
  const double kappa0 = std::max(hi - lo, span / delta.size());
  RealVector p0(3);
  p0 << s0, kappa0, delta(k);
  auto residual = [&](const RealVector& p) -> RealVector {
    RealVector r(delta.size());
    for (Eigen::Index i = 0; i < delta.size(); ++i) {
      r(i) = lorentzian_s21(delta(i), p(0), p(1), p(2)) - s21(i);
    }
    return r;
  };
  FitResult fit = least_squares(residual, static_cast<int>(delta.size()), p0,
                                {"S0", "kappa", "center"}, {"", "MHz", "MHz"}, options);
  fit.values(0) = std::abs(fit.values(0));
  fit.values(1) = std::abs(fit.values(1));
  return fit;
}

namespace {

int total_points(const std::vector<MollowTrace>& traces) {
  int n = 0;
  for (const auto& t : traces) {
    check_xy(t.delta, t.psd, 4, "fit_mollow");
    n += static_cast<int>(t.delta.size());
  }
  return n;
}

/// Model with unit P0 evaluated for [kappa, f0, Omega_0...].
RealVector mollow_shape(const std::vector<MollowTrace>& traces, const RealVector& q) {
  RealVector m(total_points(traces));
  Eigen::Index row = 0;
  for (std::size_t t = 0; t < traces.size(); ++t) {
    const double omega = q(2 + static_cast<Eigen::Index>(t));
    for (Eigen::Index i = 0; i < traces[t].delta.size(); ++i) {
      m(row++) = mollow_psd(traces[t].delta(i), 1.0, omega, q(0), q(1));
    }
  }
  return m;
}

RealVector stacked(const std::vector<MollowTrace>& traces) {
  RealVector y(total_points(traces));
  Eigen::Index row = 0;
  for (const auto& t : traces) {
    y.segment(row, t.psd.size()) = t.psd;
    row += t.psd.size();
  }
  return y;
}

}  // namespace

MollowDeviceFit fit_mollow(const std::vector<MollowTrace>& traces, double kappa_guess,
                           const LeastSquaresOptions& options) {
  if (traces.empty()) throw DomainError("fit_mollow: no traces");
  if (!(kappa_guess > 0.0)) throw DomainError("fit_mollow: kappa guess must be positive");
  const int n = total_points(traces);
  const RealVector y = stacked(traces);
  const auto nt = static_cast<Eigen::Index>(traces.size());

  // Stage 1: P0 eliminated in closed form, nonlinear fit of kappa, f0, Omega.
  auto projected = [&](const RealVector& q) -> RealVector {
    const RealVector m = mollow_shape(traces, q);
    const double mm = m.squaredNorm();
    const double p0 = mm > 0.0 ? m.dot(y) / mm : 0.0;
    return p0 * m - y;
  };
  double f0_guess = 0.0;
  {
    double w = 0.0;
    for (const auto& t : traces) {
      f0_guess += t.delta.dot(t.psd);
      w += t.psd.sum();
    }
    if (w > 0.0) f0_guess /= w;
  }
  std::vector<std::string> q_names = {"kappa", "f0"};
  for (Eigen::Index t = 0; t < nt; ++t) q_names.push_back("Omega_" + std::to_string(t));
  const double omega_scales[] = {0.3, 0.6, 1.0, 1.6, 2.5};
  FitResult best;
  bool have = false;
  for (double scale : omega_scales) {
    RealVector q(2 + nt);
    q(0) = kappa_guess;
    q(1) = f0_guess;
    for (Eigen::Index t = 0; t < nt; ++t) q(2 + t) = scale * kappa_guess * (1.0 + 0.5 * t);
    LeastSquaresOptions one = options;
    one.starts = 1;
    FitResult f = least_squares(projected, n, q, q_names, {}, one);
    if (!have || f.residual_norm < best.residual_norm) {
      best = std::move(f);
      have = true;
    }
  }

  // Stage 2: polish all parameters together for the covariance.
  const RealVector m = mollow_shape(traces, best.values);
  RealVector p(3 + nt);
  p(0) = m.dot(y) / m.squaredNorm();
  p.tail(2 + nt) = best.values;
  auto full = [&](const RealVector& v) -> RealVector {
    return v(0) * mollow_shape(traces, v.tail(2 + nt)) - y;
  };
  std::vector<std::string> names = {"P0", "kappa", "f0"};
  std::vector<std::string> units = {"", "MHz", "MHz"};
  for (Eigen::Index t = 0; t < nt; ++t) {
    names.push_back("Omega_" + std::to_string(t));
    units.push_back("MHz");
  }
  LeastSquaresOptions polish = options;
  polish.starts = 1;
  MollowDeviceFit out;
  out.fit = least_squares(full, n, p, names, units, polish);
  out.fit.values(1) = std::abs(out.fit.values(1));
  for (Eigen::Index t = 0; t < nt; ++t) out.fit.values(3 + t) = std::abs(out.fit.values(3 + t));
  out.p0 = out.fit.values(0);
  out.kappa = out.fit.values(1);
  out.f0 = out.fit.values(2);
  for (Eigen::Index t = 0; t < nt; ++t) out.omega.push_back(out.fit.values(3 + t));
  return out;
}

LinkEfficiencyFit fit_link_efficiency(const std::vector<MollowTrace>& source,
                                      double source_kappa_guess,
                                      const std::vector<MollowTrace>& gate, double gate_kappa_guess,
                                      const LeastSquaresOptions& options) {
  LinkEfficiencyFit out;
  out.source = fit_mollow(source, source_kappa_guess, options);
  out.gate = fit_mollow(gate, gate_kappa_guess, options);
  if (!(out.gate.p0 > 0.0)) throw NumericalError("fit_link_efficiency: gate P0 is not positive");
  out.eta = out.source.p0 / out.gate.p0;
  return out;
}

ChevronFit fit_chevron(const RealVector& detuning, const RealVector& population,
                       const LeastSquaresOptions& options) {
  check_xy(detuning, population, 5, "fit_chevron");
  ChevronFit out;
  const double lo = population.minCoeff();
  const double hi = population.maxCoeff();
  const double scale = std::max(1.0, population.cwiseAbs().maxCoeff());
  if (hi - lo <= 1e-9 * scale) {
    out.rejected = true;
    out.reason = "flat input: no peak or dip to fit";
    return out;
  }
  const Eigen::Index n = detuning.size();
  const Eigen::Index edge = std::max<Eigen::Index>(1, n / 10);
  const double base =
      0.5 * (population.head(edge).mean() + population.tail(edge).mean());
  Eigen::Index k_hi = 0;
  Eigen::Index k_lo = 0;
  population.maxCoeff(&k_hi);
  population.minCoeff(&k_lo);
  const bool dip = (base - lo) > (hi - base);
  const Eigen::Index k = dip ? k_lo : k_hi;
  const double amp = population(k) - base;
  double half_lo = detuning(k);
  double half_hi = detuning(k);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(population(i) - base) >= 0.5 * std::abs(amp)) {
      half_lo = std::min(half_lo, detuning(i));
      half_hi = std::max(half_hi, detuning(i));
    }
  }
  const double span = detuning.maxCoeff() - detuning.minCoeff();
  const double width0 = std::max((half_hi - half_lo) / 2.355, span / (2.0 * n));
  RealVector p0(4);
  p0 << base, amp, detuning(k), width0;
  auto residual = [&](const RealVector& p) -> RealVector {
    RealVector r(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      r(i) = gaussian_peak(detuning(i), p(0), p(1), p(2), p(3)) - population(i);
    }
    return r;
  };
  out.fit = least_squares(residual, static_cast<int>(n), p0,
                          {"base", "amplitude", "center", "width"}, {"", "", "MHz", "MHz"},
                          options);
  out.fit.values(3) = std::abs(out.fit.values(3));
  out.center = out.fit.values(2);
  out.width = out.fit.values(3);
  const double amp_err = out.fit.standard_error("amplitude");
  if (!out.fit.converged) {
    out.rejected = true;
    out.reason = "fit did not converge";
  } else if (std::abs(out.fit.values(1)) < 3.0 * amp_err) {
    out.rejected = true;
    out.reason = "peak amplitude not resolved above the noise";
  } else if (out.center < detuning.minCoeff() || out.center > detuning.maxCoeff() ||
             out.width > span) {
    out.rejected = true;
    out.reason = "fitted peak lies outside the scanned range";
  }
  return out;
}

FitResult fit_rabi_decay(const RealVector& tau, const RealVector& population,
                         std::optional<double> fixed_kappa, std::optional<double> j_guess,
                         double kappa_guess, const LeastSquaresOptions& options) {
  check_xy(tau, population, 4, "fit_rabi_decay");
  double j0 = 0.0;
  if (j_guess) {
    j0 = *j_guess;
  } else {
    // P ~ cos^2(J t) early on, so the half-population crossing sits near t = pi / (4 J)
    const double p_start = population(0);
    const double p_low = population.minCoeff();
    double t_half = tau(tau.size() - 1);
    for (Eigen::Index i = 1; i < tau.size(); ++i) {
      if (population(i) <= 0.5 * (p_start + p_low)) {
        t_half = tau(i);
        break;
      }
    }
    j0 = rad_per_ns_to_mhz(kPi / (4.0 * std::max(t_half - tau(0), 1e-9)));
  }
  const Eigen::Index n = tau.size();
  if (fixed_kappa) {
    const double kappa = mhz_to_rad_per_ns(*fixed_kappa);
    auto residual = [&](const RealVector& p) -> RealVector {
      RealVector r(n);
      const double j = mhz_to_rad_per_ns(p(0));
      for (Eigen::Index i = 0; i < n; ++i) r(i) = rabi_decay(tau(i), j, kappa) - population(i);
      return r;
    };
    RealVector p0(1);
    p0 << j0;
    FitResult fit = least_squares(residual, static_cast<int>(n), p0, {"J"}, {"MHz"}, options);
    fit.values(0) = std::abs(fit.values(0));
    return fit;
  }
  auto residual = [&](const RealVector& p) -> RealVector {
    RealVector r(n);
    const double j = mhz_to_rad_per_ns(p(0));
    const double kappa = mhz_to_rad_per_ns(p(1));
    for (Eigen::Index i = 0; i < n; ++i) r(i) = rabi_decay(tau(i), j, kappa) - population(i);
    return r;
  };
  RealVector p0(2);
  p0 << j0, kappa_guess;
  FitResult fit =
      least_squares(residual, static_cast<int>(n), p0, {"J", "kappa"}, {"MHz", "MHz"}, options);
  fit.values = fit.values.cwiseAbs();
  return fit;
}

CalibrationFit fit_coupling_vs_amplitude(const RealVector& amplitude, const RealVector& coupling) {
  check_xy(amplitude, coupling, 3, "fit_coupling_vs_amplitude");
  const Eigen::Index n = amplitude.size();
  RealMatrix design(n, 2);
  design.col(0) = amplitude;
  design.col(1) = amplitude.cwiseProduct(amplitude);
  Eigen::ColPivHouseholderQR<RealMatrix> qr(design);
  if (qr.rank() < 2) {
    throw NumericalError("fit_coupling_vs_amplitude: amplitudes do not determine a quadratic");
  }
  const RealVector c = qr.solve(coupling);
  const RealVector r = design * c - coupling;
  CalibrationFit out;
  out.fit.names = {"linear", "quadratic"};
  out.fit.units = {"rad/ns", "rad/ns"};
  out.fit.values = c;
  out.fit.residual_norm = r.norm();
  out.fit.converged = true;
  const double s2 = n > 2 ? r.squaredNorm() / static_cast<double>(n - 2) : 0.0;
  out.fit.covariance = s2 * (design.transpose() * design).inverse();
  out.calibration = pulse::CouplerCalibration(c(0), c(1));
  out.monotone = out.calibration.is_monotone();
  if (!out.monotone) {
    out.fit.warnings.push_back("fitted coupling is not monotone on [0, 1]; amplitude inversion "
                               "is unavailable");
  }
  return out;
}

}  // namespace photongate::fitting
