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

#include <cmath>
#include <random>

#include <doctest.h>

#include "photongate/dynamics/emission.hpp"
#include "photongate/fitting/fits.hpp"
#include "photongate/fitting/least_squares.hpp"
#include "photongate/fitting/models.hpp"

using namespace photongate;
using namespace photongate::fitting;

namespace {

RealVector linspace(double a, double b, int n) { return RealVector::LinSpaced(n, a, b); }

std::vector<MollowTrace> mollow_traces(double p0, double kappa, double f0,
                                       const std::vector<double>& omega, double noise,
                                       std::mt19937_64& rng) {
  std::vector<MollowTrace> out;
  for (double o : omega) {
    MollowTrace t;
    t.delta = linspace(-12.0, 12.0, 241);
    t.psd.resize(t.delta.size());
    for (Eigen::Index i = 0; i < t.delta.size(); ++i) {
      t.psd(i) = mollow_psd(t.delta(i), p0, o, kappa, f0);
    }
    if (noise > 0.0) add_noise(t.psd, noise * t.psd.maxCoeff(), rng);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST_CASE("Lorentzian model") {
  CHECK(lorentzian_s21(0.3, 2.0, 1.8, 0.3) == doctest::Approx(2.0));
  CHECK(lorentzian_s21(0.3 + 0.9, 2.0, 1.8, 0.3) == doctest::Approx(2.0 / std::sqrt(2.0)));
}

TEST_CASE("Mollow model") {
  // Integrated power P0 s^2 with saturation s = 2 Omega^2 / (kappa^2 + 2 Omega^2).
  for (double omega : {0.5, 2.0, 6.0, 40.0}) {
    double area = 0.0;
    const double step = 0.001;
    for (double x = -400.0; x <= 400.0; x += step) area += mollow_psd(x, 1.3, omega, 2.0, 0.0) * step;
    const double s = 2.0 * omega * omega / (4.0 + 2.0 * omega * omega);
    CHECK(area == doctest::Approx(1.3 * s * s).epsilon(5e-3));
  }
  // The quartic factor stays positive (no spurious poles).
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int k = 0; k < 200; ++k) CHECK(mollow_pp(u(rng) - 5.0, u(rng), u(rng)) > 0.0);
}

TEST_CASE("Rabi decay model matches direct integration") {
  const std::vector<double> tau = {0.0, 5.0, 20.0, 60.0, 150.0, 300.0};
  for (double j_mhz : {0.2, 0.6, 2.0}) {
    const double j = mhz_to_rad_per_ns(j_mhz);
    const double kappa = mhz_to_rad_per_ns(2.1);
    const auto p = dynamics::rabi_decay_population(j, kappa, tau);
    for (std::size_t k = 0; k < tau.size(); ++k) {
      CHECK(rabi_decay(tau[k], j, kappa) == doctest::Approx(p[k]).epsilon(1e-6));
    }
  }
  // Critical damping is continuous.
  const double kappa = 0.04;
  CHECK(rabi_decay(30.0, kappa / 4.0, kappa) ==
        doctest::Approx(rabi_decay(30.0, kappa / 4.0 * (1.0 + 1e-7), kappa)).epsilon(1e-5));
}

TEST_CASE("least squares") {
  // Exponential decay with known parameters.
  const RealVector x = linspace(0.0, 5.0, 40);
  RealVector y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) y(i) = 2.5 * std::exp(-0.7 * x(i));
  const ResidualFunction r = [&](const RealVector& p) -> RealVector {
    return (p(0) * (-p(1) * x.array()).exp()).matrix() - y;
  };
  RealVector p0(2);
  p0 << 1.0, 0.2;
  const FitResult f = least_squares(r, static_cast<int>(x.size()), p0, {"A", "k"}, {"", "1/ns"});
  CHECK(f.converged);
  CHECK(f.value("A") == doctest::Approx(2.5).epsilon(1e-9));
  CHECK(f.value("k") == doctest::Approx(0.7).epsilon(1e-9));
  CHECK_THROWS_AS(f.value("missing"), DomainError);
  CHECK(f.to_json()["parameters"].size() == 2);

  const RealVector p1 = f.values;
  const RealMatrix jac = numerical_jacobian(r, p1, r(p1));
  CHECK(jac(0, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(jac(1, 1) == doctest::Approx(-2.5 * x(1) * std::exp(-0.7 * x(1))).epsilon(1e-5));
}

TEST_CASE("least squares is deterministic for a fixed seed") {
  std::mt19937_64 rng(9);
  RealVector y = linspace(0.0, 1.0, 30);
  add_noise(y, 0.05, rng);
  const ResidualFunction r = [&](const RealVector& p) -> RealVector {
    return (p(0) * linspace(0.0, 1.0, 30).array() + p(1)).matrix() - y;
  };
  RealVector p0(2);
  p0 << 0.0, 0.0;
  const FitResult a = least_squares(r, 30, p0, {"m", "c"}, {"", ""});
  const FitResult b = least_squares(r, 30, p0, {"m", "c"}, {"", ""});
  CHECK(a.values == b.values);
  CHECK(a.standard_error("m") > 0.0);
}

TEST_CASE("Lorentzian fit") {
  std::mt19937_64 rng(4);
  for (double kappa : {1.8, 2.1}) {
    const RealVector d = linspace(-10.0, 10.0, 201);
    RealVector s(d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) s(i) = lorentzian_s21(d(i), 0.8, kappa, 0.25);
    const FitResult exact = fit_lorentzian(d, s);
    CHECK(exact.value("kappa") == doctest::Approx(kappa).epsilon(1e-8));
    CHECK(exact.value("center") == doctest::Approx(0.25).epsilon(1e-8));
    add_noise(s, 0.004, rng);
    CHECK(fit_lorentzian(d, s).value("kappa") == doctest::Approx(kappa).epsilon(0.02));
  }
  CHECK_THROWS_AS(fit_lorentzian(linspace(0.0, 1.0, 2), linspace(0.0, 1.0, 2)), DomainError);
}

TEST_CASE("Mollow fit recovers the link efficiency") {
  std::mt19937_64 rng(12);
  const std::vector<double> omega = {1.0, 2.5, 4.0, 6.0};
  const auto src = mollow_traces(0.75, 2.8, 0.1, omega, 0.0, rng);
  const auto gate = mollow_traces(1.0, 2.1, -0.2, omega, 0.0, rng);
  const auto fit = fit_link_efficiency(src, 3.0, gate, 2.0);
  CHECK(fit.eta == doctest::Approx(0.75).epsilon(1e-6));
  CHECK(fit.source.kappa == doctest::Approx(2.8).epsilon(1e-6));
  CHECK(fit.gate.f0 == doctest::Approx(-0.2).epsilon(1e-6));
  REQUIRE(fit.source.omega.size() == omega.size());
  for (std::size_t k = 0; k < omega.size(); ++k) {
    CHECK(std::abs(fit.source.omega[k]) == doctest::Approx(omega[k]).epsilon(1e-6));
  }
  const auto noisy = fit_mollow(mollow_traces(0.75, 2.8, 0.1, omega, 0.01, rng), 3.0);
  CHECK(noisy.p0 == doctest::Approx(0.75).epsilon(0.03));
}

TEST_CASE("chevron fit") {
  const RealVector d = linspace(-3.0, 3.0, 61);
  RealVector p(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) p(i) = gaussian_peak(d(i), 0.1, 0.7, 0.4, 0.5);
  const ChevronFit f = fit_chevron(d, p);
  CHECK_FALSE(f.rejected);
  CHECK(f.center == doctest::Approx(0.4).epsilon(1e-8));
  CHECK(f.width == doctest::Approx(0.5).epsilon(1e-8));

  RealVector dip = -p;
  CHECK(fit_chevron(d, dip).center == doctest::Approx(0.4).epsilon(1e-8));

  const ChevronFit flat = fit_chevron(d, RealVector::Constant(d.size(), 0.3));
  CHECK(flat.rejected);
  CHECK(flat.reason.find("flat") != std::string::npos);

  std::mt19937_64 rng(2);
  RealVector noise = RealVector::Constant(d.size(), 0.3);
  add_noise(noise, 0.05, rng);
  CHECK(fit_chevron(d, noise).rejected);
}

TEST_CASE("Rabi decay fit") {
  RealVector tau = linspace(0.0, 400.0, 81);
  RealVector pop(tau.size());
  const double j = mhz_to_rad_per_ns(0.9);
  const double kappa = mhz_to_rad_per_ns(2.1);
  for (Eigen::Index i = 0; i < tau.size(); ++i) pop(i) = rabi_decay(tau(i), j, kappa);
  const FitResult fixed = fit_rabi_decay(tau, pop, 2.1);
  CHECK(fixed.value("J") == doctest::Approx(0.9).epsilon(1e-6));
  const FitResult free = fit_rabi_decay(tau, pop);
  CHECK(free.value("J") == doctest::Approx(0.9).epsilon(1e-5));
  CHECK(free.value("kappa") == doctest::Approx(2.1).epsilon(1e-5));
}

TEST_CASE("coupler calibration fit") {
  const RealVector a = linspace(0.05, 1.0, 20);
  RealVector c(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) c(i) = 0.02 * a(i) + 0.03 * a(i) * a(i);
  const CalibrationFit f = fit_coupling_vs_amplitude(a, c);
  CHECK(f.monotone);
  CHECK(f.fit.values(0) == doctest::Approx(0.02).epsilon(1e-10));
  CHECK(f.calibration.amplitude_for_coupling(0.02 * 0.35 + 0.03 * 0.35 * 0.35) ==
        doctest::Approx(0.35).epsilon(1e-9));
  for (Eigen::Index i = 0; i < a.size(); ++i) c(i) = 0.05 * a(i) - 0.04 * a(i) * a(i);
  const CalibrationFit bad = fit_coupling_vs_amplitude(a, c);
  CHECK_FALSE(bad.monotone);
  CHECK_FALSE(bad.fit.warnings.empty());
  CHECK_THROWS_AS(fit_coupling_vs_amplitude(RealVector::Constant(5, 0.5), c.head(5)), NumericalError);
}
