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

#include "photongate/dynamics/operators.hpp"

#include <cmath>

#include "photongate/core/state.hpp"

namespace photongate::dynamics {

namespace {

SparseMatrix sparse(const Matrix& m) {
  SparseMatrix s = m.sparseView();
  s.makeCompressed();
  return s;
}

Matrix level_projector(int levels, int i, int j) {
  Matrix m = Matrix::Zero(levels, levels);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

Matrix lowering_matrix(int levels) {
  Matrix a = Matrix::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Controls Controls::at(const pulse::PulseSchedule& schedule, double t) {
  Controls c;
  c.source_coupling = schedule.coupling_at(pulse::Chip::Source, t);
  c.gate_coupling = schedule.coupling_at(pulse::Chip::Gate, t);
  if (const auto* seg = schedule.cphase_at(t)) {
    c.cphase_rate = seg->rate;
    c.cphase_detuning = seg->detuning;
  }
  return c;
}

ModelOperators::ModelOperators(const CascadedModel& model)
    : model_(model), dims_(model.dims()), dim_(model.dim()) {
  model_.validate();
  for (std::size_t s = 0; s < dims_.size(); ++s) {
    const Matrix a = core::embed(lowering_matrix(dims_[s]), dims_, static_cast<int>(s));
    lowering_.push_back(sparse(a));
    number_.push_back(sparse(a.adjoint() * a));
  }
  const auto& a_s = lowering_[kSourceQubit];
  const auto& b_s = lowering_[kSourceConverter];
  const auto& a_g = lowering_[kGateQubit];
  const auto& b_g = lowering_[kGateConverter];

  const Complex phase = std::polar(1.0, model_.coupler_phase);
  swap_source_ = phase * SparseMatrix(a_s * SparseMatrix(b_s.adjoint()));
  swap_gate_ = phase * SparseMatrix(a_g * SparseMatrix(b_g.adjoint()));

  const SparseMatrix fe = sparse(core::embed(level_projector(3, 2, 1), dims_, kGateQubit));
  cphase_ = SparseMatrix(fe * b_g);
  f_gate_ = sparse(core::embed(level_projector(3, 2, 2), dims_, kGateQubit));

  const double k_s = model_.source.kappa();
  const double k_g = model_.gate.kappa();
  const double eta = model_.eta;

  auto anharmonic = [](const SparseMatrix& a, double alpha) {
    const SparseMatrix ad = a.adjoint();
    return SparseMatrix(-0.5 * alpha * (ad * ad * a * a));
  };
  h_static_ = anharmonic(a_s, model_.source.alpha()) + anharmonic(a_g, model_.gate.alpha());
  if (model_.gate_in_cascade) {
    const SparseMatrix bs_bgd = b_s * SparseMatrix(b_g.adjoint());
    const SparseMatrix cascade = Complex(0.0, -0.5 * std::sqrt(eta * k_s * k_g)) *
                                 SparseMatrix(bs_bgd - SparseMatrix(bs_bgd.adjoint()));
    h_static_ += cascade;
    h_static_ += model_.gate_converter_detuning * number_[kGateConverter];
  }
  h_static_.makeCompressed();

  c1_ = std::sqrt(eta * k_s) * b_s;
  if (model_.gate_in_cascade) c1_ += std::sqrt(k_g) * b_g;
  c1_.makeCompressed();
  c2_ = std::sqrt((1.0 - eta) * k_s) * b_s;
  collapse_ = {c1_, c2_};

  if (model_.decoherence) {
    const std::pair<int, const DeviceParams*> chips[] = {{kSourceQubit, &model_.source},
                                                         {kGateQubit, &model_.gate}};
    for (const auto& [index, p] : chips) {
      auto op = [&](int i, int j, double rate) {
        return sparse(std::sqrt(rate) * core::embed(level_projector(3, i, j), dims_, index));
      };
      collapse_.push_back(op(0, 1, p->relaxation_e()));
      collapse_.push_back(op(1, 2, p->relaxation_f()));
      collapse_.push_back(op(1, 1, 2.0 * p->dephasing_e()));
      collapse_.push_back(op(2, 2, 2.0 * p->dephasing_f()));
    }
  }
}

const SparseMatrix& ModelOperators::lowering(Subsystem s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= lowering_.size()) {
    throw DimensionError("model has no subsystem " + std::to_string(int(s)));
  }
  return lowering_[static_cast<std::size_t>(s)];
}

const SparseMatrix& ModelOperators::number(Subsystem s) const {
  lowering(s);
  return number_[static_cast<std::size_t>(s)];
}

const SparseMatrix& ModelOperators::swap(pulse::Chip chip) const {
  return chip == pulse::Chip::Source ? swap_source_ : swap_gate_;
}

SparseMatrix ModelOperators::hamiltonian(const Controls& c) const {
  SparseMatrix h = h_static_;
  auto add_swap = [&h](const SparseMatrix& x, Complex j) {
    if (j == 0.0) return;
    h += j * x;
    h += std::conj(j) * SparseMatrix(x.adjoint());
  };
  add_swap(swap_source_, c.source_coupling);
  if (model_.gate_in_cascade) add_swap(swap_gate_, c.gate_coupling);
  if (c.cphase_rate != 0.0) {
    // Frame of the f0 <-> e1 drive: the anharmonic shift of |f> is cancelled.
    h += c.cphase_rate * SparseMatrix(cphase_ + SparseMatrix(cphase_.adjoint()));
    h += (c.cphase_detuning + model_.gate.alpha()) * f_gate_;
  }
  if (c.detector_coupling != 0.0) {
    if (!model_.virtual_detector) throw DomainError("detector coupling without detector");
    const SparseMatrix vd_c1 = SparseMatrix(lowering_[kDetector].adjoint()) * c1_;
    const Complex g = c.detector_coupling;
    h += Complex(0.0, -0.5) * (g * vd_c1 - std::conj(g) * SparseMatrix(vd_c1.adjoint()));
  }
  h.makeCompressed();
  return h;
}

std::vector<SparseMatrix> ModelOperators::collapse(const Controls& c) const {
  std::vector<SparseMatrix> ops = collapse_;
  if (c.detector_coupling != 0.0) {
    if (!model_.virtual_detector) throw DomainError("detector coupling without detector");
    ops[0] += std::conj(c.detector_coupling) * lowering_[kDetector];
    ops[0].makeCompressed();
  }
  return ops;
}

SparseMatrix ModelOperators::rotation(const pulse::Rotation& r) const {
  Matrix u = Matrix::Identity(3, 3);
  u.topLeftCorner(2, 2) = pulse::rotation_matrix(r.axis, r.angle);
  const int index = r.chip == pulse::Chip::Source ? kSourceQubit : kGateQubit;
  return sparse(core::embed(u, dims_, index));
}

Matrix build_hamiltonian(const CascadedModel& model, const Controls& controls) {
  return Matrix(ModelOperators(model).hamiltonian(controls));
}

Matrix build_hamiltonian(const CascadedModel& model, const pulse::PulseSchedule& schedule,
                         double t) {
  return build_hamiltonian(model, Controls::at(schedule, t));
}

std::vector<Matrix> collapse_ops(const CascadedModel& model) {
  std::vector<Matrix> out;
  for (const auto& c : ModelOperators(model).collapse()) out.emplace_back(c);
  return out;
}

}  // namespace photongate::dynamics
