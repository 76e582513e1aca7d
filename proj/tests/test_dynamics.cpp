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
#include "photongate/dynamics/evolve.hpp"
#include "photongate/dynamics/reflection.hpp"

using namespace photongate;
using namespace photongate::dynamics;

namespace {

const double kGamma = mhz_to_rad_per_ns(1.8);

CascadedModel source_only(double eta) {
  CascadedModel m;
  m.eta = eta;
  m.decoherence = false;
  m.gate_in_cascade = false;
  return m;
}

// Source emits one sech photon centred at t_cut.
pulse::PulseSchedule emission_schedule(const CascadedModel& m) {
  pulse::PulseSchedule s;
  const auto w = pulse::emission_coupling(kGamma, m.source.kappa(), 1.0);
  s.add({0.0, pulse::CouplingSegment{pulse::Chip::Source, w}});
  return s;
}

double emitted_norm(const TrajectoryResult& r) {
  double n = 0.0;
  for (std::size_t k = 0; k + 1 < r.times.size(); ++k) {
    n += std::norm(r.output_amplitude[k]) * (r.times[k + 1] - r.times[k]);
  }
  return n;
}

}  // namespace

TEST_CASE("device parameters") {
  const DeviceParams g = DeviceParams::gate_defaults();
  CHECK(g.alpha_mhz == doctest::Approx(301.7));
  CHECK(g.kappa() == doctest::Approx(kTwoPi * g.kappa_mhz * 1e-3));
  CHECK(g.dephasing_e() >= 0.0);
  DeviceParams bad = g;
  bad.t2_e_us = 3.0 * bad.t1_e_us;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("t2_e"), DomainError);
  bad = g;
  bad.kappa_mhz = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("model dimensions and collapse operators") {
  CascadedModel m;
  CHECK(m.dim() == 36);
  m.virtual_detector = true;
  CHECK(m.dim() == 72);
  CHECK(m.dims() == std::vector<int>{3, 2, 3, 2, 2});
  CHECK(ModelOperators(m).collapse().size() == 10);
  m.decoherence = false;
  CHECK(ModelOperators(m).collapse().size() == 2);
  m.eta = 1.2;
  CHECK_THROWS_AS(m.validate(), DomainError);
}

TEST_CASE("property: Hamiltonian is Hermitian for random controls") {
  CascadedModel m;
  m.virtual_detector = true;
  const ModelOperators ops(m);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n(0.0, 0.02);
  for (int k = 0; k < 100; ++k) {
    Controls c;
    c.source_coupling = Complex(n(rng), n(rng));
    c.gate_coupling = Complex(n(rng), n(rng));
    c.cphase_rate = std::abs(n(rng));
    c.cphase_detuning = n(rng);
    c.detector_coupling = Complex(n(rng), n(rng));
    const Matrix h(ops.hamiltonian(c));
    CHECK((h - h.adjoint()).norm() < 1e-14);
  }
}

TEST_CASE("CPHASE drive is resonant with f0 <-> e1") {
  CascadedModel m;
  m.decoherence = false;
  const ModelOperators ops(m);
  Controls c;
  c.cphase_rate = 0.01;
  const Matrix h(ops.hamiltonian(c));
  const Matrix f0 = product_state(m, qubit_vector(1.0, 0.0), Vector::Unit(3, 2));
  Vector e1 = Vector::Zero(m.dim());
  Vector f0v = Vector::Zero(m.dim());
  // |g e 1> on (a_S, b_S, a_G, b_G) and |g 0 f 0>.
  const std::vector<int> d = m.dims();
  auto index = [&](int qs, int bs, int qg, int bg) { return ((qs * d[1] + bs) * d[2] + qg) * d[3] + bg; };
  e1(index(0, 0, 1, 1)) = 1.0;
  f0v(index(0, 0, 2, 0)) = 1.0;
  CHECK(std::abs(Complex(f0v.dot(h * e1)) - 0.01) < 1e-14);
  CHECK(std::abs(Complex(f0v.dot(h * f0v))) < 1e-12);
  CHECK(std::abs(Complex(e1.dot(h * e1))) < 1e-12);
  CHECK(std::abs(f0.trace() - 1.0) < 1e-14);
}

TEST_CASE("reflection coefficient") {
  const double kappa = mhz_to_rad_per_ns(2.8);
  CHECK(std::abs(reflection_coefficient(kappa, 0.01, GateState::Ground, 0.0) + 1.0) < 1e-15);
  CHECK(reflection_coefficient(kappa, 5.0 * kappa, GateState::Excited, 0.0).real() > 0.9);
  CHECK(std::abs(reflection_coefficient(kappa, 0.0, GateState::Excited, 0.0) + 1.0) < 1e-15);
  CHECK_THROWS_AS(reflection_coefficient(0.0, 0.0, GateState::Ground, 0.0), DomainError);
}

TEST_CASE("property: lossless reflection has unit modulus") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  std::uniform_real_distribution<double> pos(0.001, 0.1);
  for (int k = 0; k < 200; ++k) {
    const double kappa = pos(rng);
    const double g = pos(rng);
    const double delta = u(rng);
    for (auto s : {GateState::Ground, GateState::Excited}) {
      CHECK(std::abs(std::abs(reflection_coefficient(kappa, g, s, delta)) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("FFT frequencies") {
  const auto w = fft_frequencies(8, 0.5);
  CHECK(w[0] == 0.0);
  CHECK(w[1] == doctest::Approx(kTwoPi / 4.0));
  CHECK(w[7] == doctest::Approx(-kTwoPi / 4.0));
  CHECK_THROWS_AS(fft_frequencies(0, 1.0), DomainError);
}

TEST_CASE("reflected modes") {
  const double kappa = mhz_to_rad_per_ns(2.8);
  const auto xi = pulse::sech_mode(kGamma, 1.0).normalized();
  const auto ground = reflect_mode(xi, kappa, 0.01, GateState::Ground);
  CHECK(ground.norm_squared() == doctest::Approx(1.0).epsilon(1e-3));
  const auto identity = reflect_mode(xi, [](double) { return Complex(1.0); });
  CHECK(std::abs(mode_overlap(identity, xi) - 1.0) < 1e-9);
  const auto minus = reflect_mode(xi, [](double) { return Complex(-1.0); });
  CHECK(std::abs(mode_overlap(minus, xi) + 1.0) < 1e-9);
  const auto strong = reflect_mode(xi, kappa, 20.0 * kappa, GateState::Excited);
  CHECK(mode_overlap(strong, xi).real() > 0.95);
  // The resonant ground-state reflection delays the photon and flips its sign.
  CHECK(mode_overlap(ground, xi).real() < 0.0);
}

TEST_CASE("Rabi emission of the closed-form coupling is a sech photon") {
  for (double kappa_mhz : {1.8, 2.1, 2.8}) {
    const double kappa = mhz_to_rad_per_ns(kappa_mhz);
    const auto profile = rabi_emission_profile(pulse::emission_coupling(kGamma, kappa, 0.5), kappa);
    const auto target = pulse::sech_mode(kGamma, 0.5);
    CHECK(std::norm(mode_overlap(profile.normalized(), target.normalized())) >= 0.99);
    CHECK(profile.norm_squared() >= 0.96);
  }
}

TEST_CASE("Rabi decay population") {
  const std::vector<double> tau = {0.0, 10.0, 50.0, 100.0};
  const auto free = rabi_decay_population(0.0, 0.02, tau);
  for (double p : free) CHECK(p == doctest::Approx(1.0).epsilon(1e-9));
  const auto p = rabi_decay_population(0.005, 0.02, tau);
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] < 1.0);
  CHECK(p[3] < p[1]);
}

TEST_CASE("source emission through the lossy link") {
  for (double eta : {1.0, 0.5}) {
    const CascadedModel m = source_only(eta);
    const auto s = emission_schedule(m);
    EvolveOptions o;
    o.dt_out = 0.5;
    o.rtol = 1e-7;
    o.atol = 1e-9;

    const Matrix fock = product_state(m, qubit_vector(0.0, 1.0), qubit_vector(1.0, 0.0));
    const TrajectoryResult n = evolve(m, s, fock, o);
    const std::size_t last = n.times.size() - 1;
    const double left = n.population(last, kSourceQubit, 1) + n.population(last, kSourceConverter, 1);
    CHECK(n.traces.back() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(n.leaked == doctest::Approx(1.0 - left).epsilon(1e-4));
    CHECK(n.leaked >= std::tanh(2.3) - 1e-3);

    // A superposition carries a mean field of amplitude sqrt(eta) xi / 2.
    const Matrix plus = product_state(m, qubit_vector(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)),
                                      qubit_vector(1.0, 0.0));
    const TrajectoryResult f = evolve(m, s, plus, o);
    CHECK(4.0 * emitted_norm(f) == doctest::Approx(eta * n.leaked).epsilon(1e-2));
    const double t_cut = pulse::kDefaultTruncation / kGamma;
    Complex overlap = 0.0;
    for (std::size_t k = 0; k + 1 < f.times.size(); ++k) {
      overlap += pulse::sech_amplitude(kGamma, f.times[k] - t_cut) * f.output_amplitude[k] * 0.5;
    }
    CHECK(std::norm(overlap) / emitted_norm(f) >= 0.96);
  }
}

TEST_CASE("virtual detector captures the emitted mode") {
  CascadedModel m = source_only(1.0);
  m.virtual_detector = true;
  const auto s = emission_schedule(m);
  const double t_cut = pulse::kDefaultTruncation / kGamma;
  EvolveOptions o;
  o.detector = ReferenceMode::sech(kGamma, t_cut, t_cut);
  const Matrix rho0 = product_state(m, qubit_vector(0.0, 1.0), qubit_vector(1.0, 0.0));
  const TrajectoryResult r = evolve(m, s, rho0, o);
  const double captured = r.population(r.times.size() - 1, kDetector, 1);
  CHECK(captured == doctest::Approx(std::tanh(2.3) * std::tanh(2.3)).epsilon(2e-2));
}

TEST_CASE("rotations act at their scheduled time") {
  CascadedModel m;
  m.decoherence = false;
  pulse::PulseSchedule s;
  s.add({5.0, pulse::Rotation{pulse::Chip::Gate, pulse::Axis::X, kPi}});
  s.add({5.0, pulse::Idle{pulse::Chip::Gate, 10.0}});
  EvolveOptions o;
  o.store_states = true;
  const TrajectoryResult r = evolve(m, s, ground_state(m), o);
  CHECK(r.population(0, kGateQubit, 0) == doctest::Approx(1.0));
  CHECK(r.population(r.times.size() - 1, kGateQubit, 1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.states.size() == r.times.size());
  const auto amp = output_amplitude(r, m);
  for (const auto& a : amp) CHECK(std::abs(a) < 1e-12);
}
