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

#include "photongate/core/process.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "photongate/core/state.hpp"

namespace photongate::core {

std::string_view to_string(GateLabel g) {
  switch (g) {
    case GateLabel::I: return "I";
    case GateLabel::X: return "X";
    case GateLabel::Y: return "Y";
    case GateLabel::T: return "T";
    case GateLabel::CPHASE: return "CPHASE";
  }
  return "?";
}

std::optional<GateLabel> parse_gate_label(std::string_view text) {
  for (GateLabel g : {GateLabel::I, GateLabel::X, GateLabel::Y, GateLabel::T, GateLabel::CPHASE}) {
    if (text == to_string(g)) return g;
  }
  return std::nullopt;
}

int gate_qubits(GateLabel g) { return g == GateLabel::CPHASE ? 2 : 1; }

ProcessMap::ProcessMap(Matrix chi, int n_qubits) : chi_(std::move(chi)), n_qubits_(n_qubits) {
  if (n_qubits < 1) throw DimensionError("process map needs at least one qubit");
  const Eigen::Index expected = Eigen::Index{1} << (2 * n_qubits);
  if (chi_.rows() != expected || chi_.cols() != expected) {
    throw DimensionError("chi of " + std::to_string(n_qubits) + " qubits must be " +
                         std::to_string(expected) + " x " + std::to_string(expected));
  }
}

Matrix ProcessMap::apply(const Matrix& rho) const {
  const auto& basis = pauli_basis(n_qubits_);
  if (rho.rows() != basis.front().rows()) throw DimensionError("process apply: dimension");
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const Matrix left = basis[m] * rho;
    for (std::size_t n = 0; n < basis.size(); ++n) {
      const Complex c = chi_(m, n);
      if (c != 0.0) out += c * left * basis[n].adjoint();
    }
  }
  return out;
}

const std::vector<Matrix>& pauli_basis(int n_qubits) {
  static std::mutex mutex;
  static std::map<int, std::vector<Matrix>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n_qubits); it != cache.end()) return it->second;

  Matrix single[4];
  single[0] = Matrix::Identity(2, 2);
  single[1] = Matrix::Zero(2, 2);
  single[1](0, 1) = single[1](1, 0) = 1.0;
  single[2] = Matrix::Zero(2, 2);
  single[2](0, 1) = -kI;
  single[2](1, 0) = kI;
  single[3] = Matrix::Zero(2, 2);
  single[3](0, 0) = 1.0;
  single[3](1, 1) = -1.0;

  std::vector<Matrix> basis(single, single + 4);
  for (int q = 1; q < n_qubits; ++q) {
    std::vector<Matrix> next;
    for (const auto& b : basis) {
      for (const auto& s : single) next.push_back(tensor(b, s));
    }
    basis = std::move(next);
  }
  return cache.emplace(n_qubits, std::move(basis)).first->second;
}

ProcessMap process_from_unitary(const Matrix& unitary) {
  const auto d = unitary.rows();
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  if ((Eigen::Index{1} << n) != d || unitary.cols() != d) {
    throw DimensionError("unitary must be 2^n x 2^n");
  }
  const auto& basis = pauli_basis(n);
  Vector v(basis.size());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    v(static_cast<Eigen::Index>(m)) = (basis[m].adjoint() * unitary).trace() / double(d);
  }
  return ProcessMap(v * v.adjoint(), n);
}

Matrix gate_unitary(GateLabel g) {
  switch (g) {
    case GateLabel::I: return pauli_basis(1)[0];
    case GateLabel::X: return pauli_basis(1)[1];
    case GateLabel::Y: return pauli_basis(1)[2];
    case GateLabel::T: {
      Matrix t = Matrix::Identity(2, 2);
      t(1, 1) = std::polar(1.0, kPi / 4.0);
      return t;
    }
    case GateLabel::CPHASE: {
      Matrix cz = Matrix::Identity(4, 4);
      cz(3, 3) = -1.0;
      return cz;
    }
  }
  throw DomainError("unknown gate label");
}

ProcessMap ideal_process(GateLabel g) { return process_from_unitary(gate_unitary(g)); }

namespace {

int qubits_for_chi(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("chi must be square");
  int n = 0;
  while ((Eigen::Index{1} << (2 * n)) < m.rows()) ++n;
  if ((Eigen::Index{1} << (2 * n)) != m.rows() || n == 0) {
    throw DimensionError("chi dimension must be 4^n");
  }
  return n;
}

Matrix clip_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

ProcessMap project_psd(const Matrix& matrix) {
  const int n = qubits_for_chi(matrix);
  Matrix clipped = clip_psd(matrix);
  const double tr = clipped.trace().real();
  if (!(tr > 0.0)) throw NumericalError("project_psd: matrix has no positive part");
  clipped /= tr;
  return ProcessMap(hermitian_part(clipped), n);
}

double psd_projection_distance(const Matrix& matrix) {
  const Matrix h = hermitian_part(matrix);
  return (h - clip_psd(h)).norm();
}

double process_fidelity(const ProcessMap& a, const ProcessMap& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("process_fidelity: qubit numbers differ");
  }
  return std::clamp(uhlmann_fidelity(a.chi(), b.chi()), 0.0, 1.0);
}

}  // namespace photongate::core
