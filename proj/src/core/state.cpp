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

#include "photongate/core/state.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

namespace photongate::core {
namespace {

int product(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

void check_dims(const Matrix& m, const std::vector<int>& dims) {
  if (m.rows() != m.cols()) {
    throw DimensionError("density matrix must be square");
  }
  if (dims.empty()) {
    throw DimensionError("subsystem dimension list is empty");
  }
  for (int d : dims) {
    if (d <= 0) throw DimensionError("subsystem dimensions must be positive");
  }
  if (product(dims) != m.rows()) {
    std::ostringstream os;
    os << "subsystem dimensions multiply to " << product(dims) << " but matrix has size "
       << m.rows();
    throw DimensionError(os.str());
  }
}

}  // namespace

QuantumState::QuantumState(Matrix matrix, std::vector<int> subsystem_dims)
    : matrix_(std::move(matrix)), dims_(std::move(subsystem_dims)) {
  check_dims(matrix_, dims_);
}

QuantumState::QuantumState(Matrix matrix)
    : QuantumState(matrix, std::vector<int>{static_cast<int>(matrix.rows())}) {}

QuantumState QuantumState::pure(const Vector& psi, std::vector<int> subsystem_dims) {
  return QuantumState(psi * psi.adjoint(), std::move(subsystem_dims));
}

QuantumState QuantumState::basis(std::span<const int> levels, std::vector<int> subsystem_dims) {
  if (levels.size() != subsystem_dims.size()) {
    throw DimensionError("basis: one level per subsystem required");
  }
  int flat = 0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k] < 0 || levels[k] >= subsystem_dims[k]) {
      throw DimensionError("basis: level out of range");
    }
    flat = flat * subsystem_dims[k] + levels[k];
  }
  const int dim = product(subsystem_dims);
  Matrix m = Matrix::Zero(dim, dim);
  m(flat, flat) = 1.0;
  return QuantumState(std::move(m), std::move(subsystem_dims));
}

double QuantumState::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double QuantumState::trace_deviation() const { return std::abs(matrix_.trace() - 1.0); }

double QuantumState::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(matrix_), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool QuantumState::is_valid(const StateTolerance& tol) const {
  return hermiticity_error() <= tol.hermiticity && trace_deviation() <= tol.trace &&
         min_eigenvalue() >= tol.min_eigenvalue;
}

void QuantumState::validate(const StateTolerance& tol) const {
  if (hermiticity_error() > tol.hermiticity) {
    throw DomainError("state is not Hermitian (error " + std::to_string(hermiticity_error()) +
                      ")");
  }
  if (trace_deviation() > tol.trace) {
    throw DomainError("state trace deviates from 1 by " + std::to_string(trace_deviation()));
  }
  if (const double ev = min_eigenvalue(); ev < tol.min_eigenvalue) {
    throw DomainError("state has negative eigenvalue " + std::to_string(ev));
  }
}

Complex QuantumState::expect(const Matrix& op) const {
  if (op.rows() != matrix_.rows() || op.cols() != matrix_.cols()) {
    throw DimensionError("expect: operator dimension mismatch");
  }
  return (op * matrix_).trace();
}

Matrix tensor(std::span<const Matrix> factors) {
  if (factors.empty()) throw DimensionError("tensor: empty factor list");
  Matrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const Matrix& f = factors[k];
    if (f.rows() != f.cols()) throw DimensionError("tensor: factors must be square");
    Matrix next(out.rows() * f.rows(), out.cols() * f.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = out(i, j) * f;
      }
    }
    out = std::move(next);
  }
  if (out.rows() != out.cols()) throw DimensionError("tensor: factors must be square");
  return out;
}

QuantumState tensor(std::span<const QuantumState> factors) {
  if (factors.empty()) throw DimensionError("tensor: empty factor list");
  std::vector<Matrix> mats;
  std::vector<int> dims;
  for (const auto& f : factors) {
    mats.push_back(f.matrix());
    dims.insert(dims.end(), f.dims().begin(), f.dims().end());
  }
  return QuantumState(tensor(std::span<const Matrix>(mats)), std::move(dims));
}

QuantumState partial_trace(const QuantumState& state, std::vector<int> keep) {
  const auto& dims = state.dims();
  const int n = static_cast<int>(dims.size());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int k : keep) {
    if (k < 0 || k >= n) {
      throw DimensionError("partial_trace: subsystem index " + std::to_string(k) +
                           " out of range");
    }
  }
  if (keep.empty()) throw DimensionError("partial_trace: nothing to keep");

  std::vector<bool> kept(n, false);
  for (int k : keep) kept[k] = true;
  std::vector<int> kept_dims;
  for (int k : keep) kept_dims.push_back(dims[k]);

  // Split every flat index into its kept and traced parts.
  const int dim = state.dim();
  std::vector<int> kept_index(dim), traced_index(dim);
  for (int flat = 0; flat < dim; ++flat) {
    int rest = flat;
    int k_idx = 0, k_stride = 1, t_idx = 0, t_stride = 1;
    for (int s = n - 1; s >= 0; --s) {
      const int level = rest % dims[s];
      rest /= dims[s];
      if (kept[s]) {
        k_idx += level * k_stride;
        k_stride *= dims[s];
      } else {
        t_idx += level * t_stride;
        t_stride *= dims[s];
      }
    }
    kept_index[flat] = k_idx;
    traced_index[flat] = t_idx;
  }

  const int out_dim = product(kept_dims);
  Matrix out = Matrix::Zero(out_dim, out_dim);
  const Matrix& m = state.matrix();
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += m(i, j);
    }
  }
  return QuantumState(std::move(out), std::move(kept_dims));
}

Matrix embed(const Matrix& op, std::span<const int> dims, int index) {
  if (index < 0 || index >= static_cast<int>(dims.size())) {
    throw DimensionError("embed: subsystem index out of range");
  }
  if (op.rows() != dims[index] || op.cols() != dims[index]) {
    throw DimensionError("embed: operator does not match subsystem dimension");
  }
  const int before = product(dims.first(index));
  const int after = product(dims.subspan(index + 1));
  const Matrix parts[] = {Matrix::Identity(before, before), op, Matrix::Identity(after, after)};
  return tensor(std::span<const Matrix>(parts));
}

KrausChannel::KrausChannel(std::vector<Matrix> operators, std::string label)
    : ops_(std::move(operators)), label_(std::move(label)) {
  if (ops_.empty()) throw DimensionError("Kraus channel needs at least one operator");
  const auto d = ops_.front().rows();
  for (const auto& k : ops_) {
    if (k.rows() != d || k.cols() != d) {
      throw DimensionError("Kraus operators must be square and of equal dimension");
    }
  }
}

double KrausChannel::completeness_error() const {
  Matrix sum = Matrix::Zero(dim(), dim());
  for (const auto& k : ops_) sum += k.adjoint() * k;
  return (sum - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

bool KrausChannel::is_trace_preserving(double tol) const { return completeness_error() <= tol; }

KrausChannel loss_channel(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw DomainError("loss channel transmission must lie in [0, 1]");
  }
  Matrix k0 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(eta);
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(1.0 - eta);
  return KrausChannel({k0, k1}, "loss(" + std::to_string(eta) + ")");
}

QuantumState apply_channel(const QuantumState& state, const KrausChannel& channel) {
  if (channel.dim() != state.dim()) {
    throw DimensionError("apply_channel: channel dimension " + std::to_string(channel.dim()) +
                         " does not match state dimension " + std::to_string(state.dim()));
  }
  Matrix out = Matrix::Zero(state.dim(), state.dim());
  for (const auto& k : channel.operators()) out += k * state.matrix() * k.adjoint();
  return QuantumState(std::move(out), state.dims());
}

QuantumState apply_channel(const QuantumState& state, const KrausChannel& channel,
                           int subsystem) {
  const auto& dims = state.dims();
  if (subsystem < 0 || subsystem >= static_cast<int>(dims.size())) {
    throw DimensionError("apply_channel: subsystem index out of range");
  }
  if (channel.dim() != dims[subsystem]) {
    throw DimensionError("apply_channel: channel does not match subsystem dimension");
  }
  std::vector<Matrix> lifted;
  for (const auto& k : channel.operators()) lifted.push_back(embed(k, dims, subsystem));
  return apply_channel(state, KrausChannel(std::move(lifted), channel.label()));
}

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

Matrix sqrt_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  const Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

// Rank-one argument: F = lambda <v|b|v> without square roots of round-off.
std::optional<double> rank_one_fidelity(const Matrix& a, const Matrix& b) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(a));
  const Eigen::Index n = es.eigenvalues().size();
  const double top = es.eigenvalues()(n - 1);
  if (!(top > 0.0)) return std::nullopt;
  if (n > 1 && std::abs(es.eigenvalues()(n - 2)) > 1e-12 * top) return std::nullopt;
  const Vector v = es.eigenvectors().col(n - 1);
  return top * (v.adjoint() * b * v)(0, 0).real();
}

}  // namespace

double uhlmann_fidelity(const Matrix& a, const Matrix& b) {
  if (const auto f = rank_one_fidelity(a, b)) return *f;
  if (const auto f = rank_one_fidelity(b, a)) return *f;
  const Matrix ra = sqrt_psd(a);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(ra * b * ra), Eigen::EigenvaluesOnly);
  const double tr = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return tr * tr;
}

double state_fidelity(const QuantumState& rho, const QuantumState& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("state_fidelity: dimension mismatch");
  // Only positivity is an error here; trace drift of simulated states is not.
  const StateTolerance tol{1e-8, std::numeric_limits<double>::infinity(), -1e-8};
  rho.validate(tol);
  sigma.validate(tol);
  return std::clamp(uhlmann_fidelity(rho.matrix(), sigma.matrix()), 0.0, 1.0);
}

}  // namespace photongate::core
