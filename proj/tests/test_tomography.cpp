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

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <doctest.h>

#include "photongate/tomography/moments.hpp"
#include "photongate/tomography/process_tomography.hpp"
#include "photongate/tomography/reconstruct.hpp"

using namespace photongate;
using namespace photongate::tomography;

namespace {

Matrix random_density(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = Complex(n(rng), n(rng));
  }
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

Matrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = Complex(n(rng), n(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(d, d);
}

// Random CPTP map as Kraus operators: rows of a Stinespring isometry.
std::vector<Matrix> random_kraus(int d, int rank, std::mt19937_64& rng) {
  const Matrix u = random_unitary(d * rank, rng);
  std::vector<Matrix> k;
  for (int r = 0; r < rank; ++r) k.push_back(u.block(r * d, 0, d, d));
  return k;
}

Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& rho) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

core::QuantumState lossy(const Matrix& rho, double eta, int n) {
  core::QuantumState s(rho, std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int q = 0; q < n; ++q) s = core::apply_channel(s, core::loss_channel(eta), q);
  return s;
}

}  // namespace

TEST_CASE("cardinal states and input labels") {
  CHECK(cardinal_state("+")(0, 1).real() == doctest::Approx(0.5));
  CHECK(std::abs(cardinal_state("+i")(1, 0) - Complex(0.0, 0.5)) < 1e-15);
  CHECK_THROWS_AS(cardinal_state("2"), DomainError);
  CHECK(cardinal_inputs(1).size() == 6);
  CHECK(cardinal_inputs(2).size() == 36);
  CHECK(minimal_inputs(2).size() == 16);
  CHECK(cardinal_inputs(2).front() == "0,0");
  CHECK(input_state("1,+").rows() == 4);
  CHECK(std::abs(input_state("1,0")(2, 2) - 1.0) < 1e-15);
}

TEST_CASE("property: moments reconstruct single-rail states") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 150; ++k) {
    const core::QuantumState rho(random_density(2, rng), {2});
    const MomentSet m = moments_of_state(rho);
    CHECK(m.is_physical());
    const auto back = reconstruct_qubit_state(m);
    CHECK((back.matrix() - rho.matrix()).norm() < 1e-12);
  }
}

TEST_CASE("property: moments reconstruct two-mode states") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 120; ++k) {
    const core::QuantumState rho(random_density(4, rng), {2, 2});
    const MomentSet m = moments_of_state(rho);
    CHECK(m.modes == 2);
    const auto back = reconstruct_two_mode_state(m);
    CHECK((back.matrix() - rho.matrix()).norm() < 1e-12);
  }
}

TEST_CASE("property: attenuated moments equal the loss channel") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int k = 0; k < 100; ++k) {
    const double eta = u(rng);
    const Matrix rho = random_density(4, rng);
    const MomentSet m = attenuate_moments(moments_of_state(core::QuantumState(rho, {2, 2})), eta);
    const auto back = reconstruct_two_mode_state(m);
    CHECK((back.matrix() - lossy(rho, eta, 2).matrix()).norm() < 1e-12);
  }
}

TEST_CASE("moment normalisation") {
  const core::QuantumState one(cardinal_state("1"), {2});
  MomentSet m = moments_of_state(one);
  MomentSet scaled = m;
  for (auto& [key, value] : scaled.values) value *= std::pow(0.6, 0.5 * (key[0] + key[1]));
  const MomentSet back = normalize_moments(scaled, 0.6);
  CHECK(std::abs(back.get(1, 1) - 1.0) < 1e-14);
  CHECK_THROWS_AS(normalize_moments(m, 0.0), DomainError);
  CHECK_THROWS_AS(reconstruct_two_mode_state(m), DimensionError);
  CHECK_THROWS_AS(normalize_moments(m, 1.0, -1.0), DomainError);
}

TEST_CASE("density matrix projection") {
  Matrix m(2, 2);
  m << 1.1, 0.0, 0.0, -0.1;
  const Matrix p = project_density_matrix(m);
  CHECK(std::abs(p.trace() - 1.0) < 1e-14);
  Eigen::SelfAdjointEigenSolver<Matrix> es(p);
  CHECK(es.eigenvalues().minCoeff() >= -1e-14);
  MomentSet bad;
  bad.set(1, 1, 0, 0, -0.2);
  bad.set(0, 0, 0, 0, 1.0);
  bad.set(1, 0, 0, 0, 0.0);
  bad.set(0, 1, 0, 0, 0.0);
  CHECK_FALSE(bad.is_physical());
  std::vector<std::string> warnings;
  const auto state = reconstruct_qubit_state(bad, &warnings);
  CHECK_FALSE(warnings.empty());
  CHECK(std::abs(state.matrix().trace() - 1.0) < 1e-12);
}

TEST_CASE("property: chi fit recovers random channels") {
  std::mt19937_64 rng(31);
  for (int n : {1, 2}) {
    const int cases = n == 1 ? 100 : 20;
    for (int c = 0; c < cases; ++c) {
      const int d = 1 << n;
      const auto kraus = random_kraus(d, 1 + c % 3, rng);
      for (const auto& labels : {minimal_inputs(n), cardinal_inputs(n)}) {
        std::vector<Matrix> in;
        std::vector<Matrix> out;
        for (const auto& l : labels) {
          in.push_back(input_state(l));
          out.push_back(apply_kraus(kraus, in.back()));
        }
        const Matrix chi = fit_chi(in, out, n);
        // The chi matrix must reproduce every output, including non-cardinal probes.
        const Matrix probe = random_density(d, rng);
        Matrix predicted = Matrix::Zero(d, d);
        const auto& basis = core::pauli_basis(n);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          for (std::size_t j = 0; j < basis.size(); ++j) {
            predicted += chi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * basis[i] *
                         probe * basis[j].adjoint();
          }
        }
        CHECK((predicted - apply_kraus(kraus, probe)).norm() < 1e-10);
        CHECK(core::psd_projection_distance(chi) < 1e-10);
      }
    }
  }
}

TEST_CASE("chi fit rejects incomplete input sets") {
  const std::vector<Matrix> in = {input_state("0"), input_state("1")};
  CHECK_THROWS_AS(fit_chi(in, in, 1), NumericalError);
  const std::vector<Matrix> one = {input_state("0")};
  CHECK_THROWS_AS(fit_chi(in, one, 1), DimensionError);
}

TEST_CASE("process tomography of ideal and lossy gates") {
  for (auto g : {core::GateLabel::I, core::GateLabel::X, core::GateLabel::Y, core::GateLabel::T,
                 core::GateLabel::CPHASE}) {
    const int n = core::gate_qubits(g);
    const Matrix u = core::gate_unitary(g);
    const TomographyRunner ideal = [&](const std::string& l) {
      const Matrix rho = input_state(l);
      return core::QuantumState(u * rho * u.adjoint(), std::vector<int>(n, 2));
    };
    const auto r = process_tomography(g, ideal, {0.75, {}});
    CHECK(r.f_tot == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.inputs.size() == cardinal_inputs(n).size());

    // Transmission loss eta on every rail ahead of the gate.
    const double eta = 0.75;
    const TomographyRunner lossy_runner = [&](const std::string& l) {
      const Matrix rho = lossy(input_state(l), eta, n).matrix();
      return core::QuantumState(u * rho * u.adjoint(), std::vector<int>(n, 2));
    };
    const auto lr = process_tomography(g, lossy_runner, {eta, minimal_inputs(n)});
    const double single = std::pow(1.0 + std::sqrt(eta), 2) / 4.0;
    CHECK(lr.f_tot == doctest::Approx(std::pow(single, n)).epsilon(1e-9));
    CHECK(lr.f_int == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(lr.to_json()["F_int"].get<double>() == lr.f_int);
  }
}
