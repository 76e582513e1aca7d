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
#include <sstream>

#include <doctest.h>

#include "photongate/experiments/composite_cphase.hpp"
#include "photongate/experiments/pipeline.hpp"
#include "photongate/experiments/scenarios.hpp"
#include "photongate/tomography/process_tomography.hpp"

using namespace photongate;
using namespace photongate::experiments;

namespace {

Matrix random_operator(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Matrix m(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m(i, j) = Complex(n(rng), n(rng));
  }
  return m;
}

CompositeOptions lossless_ideal() {
  CompositeOptions o;
  o.pipeline.model.eta = 1.0;
  o.pipeline.model.decoherence = false;
  o.ideal_reflection = true;
  return o;
}

// Lossless, decoherence-free, with pulses long enough that truncation is negligible.
PipelineOptions untruncated() {
  PipelineOptions o;
  o.model.eta = 1.0;
  o.model.decoherence = false;
  o.schedule.truncation = 8.0;
  return o;
}

}  // namespace

TEST_CASE("property: spanning-set coefficients reproduce any operator") {
  std::mt19937_64 rng(41);
  const auto& labels = basis_labels();
  for (int k = 0; k < 150; ++k) {
    const Matrix m = random_operator(rng);
    const auto c = basis_coefficients(m);
    Matrix back = Matrix::Zero(2, 2);
    for (int i = 0; i < 4; ++i) back += c[i] * tomography::cardinal_state(labels[i]);
    CHECK((back - m).norm() < 1e-12);
  }
}

TEST_CASE("prepared qubits match the cardinal states") {
  for (const auto& label : pulse::cardinal_labels()) {
    const Vector v = prepared_qubit(label);
    CHECK(v.size() == 3);
    CHECK(std::abs(v(2)) < 1e-15);
    const Matrix rho = v.head(2) * v.head(2).adjoint();
    CHECK((rho - tomography::cardinal_state(label)).norm() < 1e-12);
  }
}

TEST_CASE("detector embedding") {
  std::mt19937_64 rng(3);
  PipelineOptions o;
  const int d = o.bare_model().dim();
  CHECK(o.detector_model().dim() == 2 * d);
  const Matrix rho = dynamics::product_state(o.bare_model(), prepared_qubit("+"), prepared_qubit("0"));
  const Matrix full = with_detector(rho);
  CHECK(full.rows() == 2 * d);
  const Matrix det = detector_block(full);
  CHECK(std::abs(det(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(det(1, 1)) < 1e-14);
  CHECK(std::abs(full.trace() - 1.0) < 1e-14);
}

TEST_CASE("parallel map keeps index order") {
  const std::function<int(int)> sq = [](int i) { return i * i; };
  for (int threads : {1, 3}) {
    const auto v = parallel_map<int>(10, threads, sq);
    REQUIRE(v.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK(v[i] == i * i);
  }
  const std::function<int(int)> boom = [](int i) -> int {
    if (i == 4) throw NumericalError("boom");
    return i;
  };
  CHECK_THROWS_AS(parallel_map<int>(8, 2, boom), NumericalError);
}

TEST_CASE("tables") {
  Table t;
  t.columns = {"x", "y"};
  t.add_row({1.0, 0.5});
  CHECK_THROWS_AS(t.add_row({1.0}), DimensionError);
  std::ostringstream os;
  t.write_csv(os);
  CHECK(os.str().rfind("x,y\n1,0.5", 0) == 0);
}

TEST_CASE("synthetic fits are reproducible") {
  const auto a = lorentzian_round_trip(2.1, 5);
  const auto b = lorentzian_round_trip(2.1, 5);
  CHECK(a.values == b.values);
  CHECK(a.value("kappa") == doctest::Approx(2.1).epsilon(0.02));
  const auto m = mollow_round_trip(0.75, 2.8, 2.1, 8);
  CHECK(m.eta == doctest::Approx(0.75).epsilon(0.03));
  const auto cal = synthetic_calibration();
  CHECK(cal.is_monotone());
}

TEST_CASE("ideal reflection factors") {
  const ReflectionFactors f = reflection_factors(lossless_ideal());
  CHECK(std::abs(f.coherence[0] - 1.0) < 1e-6);
  CHECK(std::abs(f.coherence[1] + 1.0) < 1e-6);
  CHECK(std::abs(f.coherence[2] - 1.0) < 1e-6);
  CHECK((f.gram - f.gram.adjoint()).norm() < 1e-12);
}

TEST_CASE("reflection flips sign with the gate state") {
  PipelineOptions o;
  const auto g = cphase_reflection(o, dynamics::GateState::Ground);
  const auto e = cphase_reflection(o, dynamics::GateState::Excited);
  CHECK(g.sign < 0.0);
  CHECK(e.sign > 0.0);
  // The resonant reflection distorts the photon.
  CHECK(g.mode_overlap < 1.0);
  CHECK(g.mode_overlap > 0.0);
}

TEST_CASE("lossless Bell state approaches the target") {
  const BellResult b = bell_state(lossless_ideal());
  CHECK(b.fidelity >= 0.95);
  CHECK(std::abs(b.state.matrix().trace() - 1.0) < 1e-9);
  CHECK(bell_target().norm() == doctest::Approx(1.0));
}

TEST_CASE("ideal-limit single-qubit gates") {
  SingleQubitPipeline p(untruncated());
  for (auto g : {core::GateLabel::I, core::GateLabel::T}) {
    const auto r = p.tomography(g, 1.0);
    CHECK(r.f_tot >= 0.99);
  }
}

TEST_CASE("ideal-limit CPHASE") {
  CompositeOptions o = lossless_ideal();
  o.pipeline = untruncated();
  CompositeCphase gate(o);
  const auto r = gate.tomography(1.0, tomography::minimal_inputs(2));
  CHECK(r.f_tot >= 0.97);
  CHECK(r.f_int == doctest::Approx(r.f_tot).epsilon(1e-9));
}
