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

#include "photongate/experiments/pipeline.hpp"

#include <cmath>

#include "photongate/pulse/coupling.hpp"
#include "photongate/tomography/reconstruct.hpp"

namespace photongate::experiments {

dynamics::CascadedModel PipelineOptions::bare_model() const {
  dynamics::CascadedModel m = model;
  m.virtual_detector = false;
  return m;
}

dynamics::CascadedModel PipelineOptions::detector_model() const {
  dynamics::CascadedModel m = model;
  m.virtual_detector = true;
  return m;
}

dynamics::EvolveOptions PipelineOptions::evolve_options(double t_start, double t_stop) const {
  dynamics::EvolveOptions eo;
  eo.t_start = t_start;
  eo.t_stop = t_stop;
  eo.dt_out = std::max(t_stop - t_start, 1.0);
  eo.rtol = rtol;
  eo.atol = atol;
  return eo;
}

std::array<Complex, 4> basis_coefficients(const Matrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError("basis_coefficients: need 2x2");
  const Complex a = rho(0, 0);
  const Complex d = rho(1, 1);
  const Complex b = rho(0, 1);
  const Complex c = rho(1, 0);
  const Complex x = b + c;           // weight of |+><+|
  const Complex y = kI * (b - c);    // weight of |+i><+i|
  return {a - 0.5 * (x + y), d - 0.5 * (x + y), x, y};
}

const std::array<std::string, 4>& basis_labels() {
  static const std::array<std::string, 4> labels{"0", "1", "+", "+i"};
  return labels;
}

Vector prepared_qubit(const std::string& label) {
  Matrix u = Matrix::Identity(2, 2);
  for (const auto& r : pulse::cardinal_preparation(label)) {
    u = pulse::rotation_matrix(r.axis, r.angle) * u;
  }
  return dynamics::qubit_vector(u(0, 0), u(1, 0));
}

Matrix with_detector(const Matrix& rho) {
  Matrix vac = Matrix::Zero(2, 2);
  vac(0, 0) = 1.0;
  return core::tensor(rho, vac);
}

Matrix detector_block(const Matrix& rho) {
  const Eigen::Index n = rho.rows() / 2;
  Matrix out = Matrix::Zero(2, 2);
  for (Eigen::Index s = 0; s < n; ++s) out += rho.block(2 * s, 2 * s, 2, 2);
  return out;
}

namespace {

double detected_photons(const PipelineOptions& options, const dynamics::CascadedModel& model,
                        pulse::Chip chip, double kappa_shape, const Vector& source,
                        const Vector& gate) {
  const auto& so = options.schedule;
  const double t_cut = so.t_cut();
  const pulse::CouplingWaveform wf =
      pulse::emission_coupling(so.bandwidth, kappa_shape, so.dt, t_cut);
  pulse::PulseSchedule s(so.frame_ratio);
  s.add({0.0, pulse::CouplingSegment{chip, wf}});
  s.add_bin({"P1", 0.0, wf.grid.duration()});
  dynamics::EvolveOptions eo = options.evolve_options(0.0, wf.grid.duration());
  eo.detector = dynamics::ReferenceMode::sech(so.bandwidth, t_cut, t_cut);
  const auto traj = dynamics::evolve(model, s, dynamics::product_state(model, source, gate), eo);
  return detector_block(traj.final_state)(1, 1).real();
}

}  // namespace

double reference_photon_number(const PipelineOptions& options) {
  return detected_photons(options, options.detector_model(), pulse::Chip::Gate,
                          options.schedule.gate_kappa, dynamics::qubit_vector(1.0, 0.0),
                          dynamics::qubit_vector(0.0, 1.0));
}

double source_photon_number(const PipelineOptions& options) {
  dynamics::CascadedModel m = options.detector_model();
  m.gate_in_cascade = false;
  return detected_photons(options, m, pulse::Chip::Source, options.schedule.source_kappa,
                          dynamics::qubit_vector(0.0, 1.0), dynamics::qubit_vector(1.0, 0.0));
}

SingleQubitPipeline::SingleQubitPipeline(PipelineOptions options) : options_(std::move(options)) {
  options_.model.validate();
  options_.schedule.validate();
}

double SingleQubitPipeline::reference_number() {
  if (!n_ref_) n_ref_ = reference_photon_number(options_);
  return *n_ref_;
}

Matrix SingleQubitPipeline::slot_state_basis(int k) {
  auto it = slot_cache_.find(k);
  if (it != slot_cache_.end()) return it->second;
  const dynamics::CascadedModel model = options_.bare_model();
  const pulse::PulseSchedule s = pulse::build_schedule(core::GateLabel::I, options_.schedule);
  const double t_slot = pulse::gate_slot_start(s);
  const Matrix rho0 = dynamics::product_state(
      model, prepared_qubit(basis_labels()[static_cast<std::size_t>(k)]),
      dynamics::qubit_vector(1.0, 0.0));
  const auto traj = dynamics::evolve(model, s, rho0, options_.evolve_options(0.0, t_slot));
  return slot_cache_.emplace(k, traj.final_state).first->second;
}

Matrix SingleQubitPipeline::slot_state(const Matrix& input) {
  const auto c = basis_coefficients(input);
  Matrix out = c[0] * slot_state_basis(0);
  for (int k = 1; k < 4; ++k) out += c[static_cast<std::size_t>(k)] * slot_state_basis(k);
  return out;
}

Matrix SingleQubitPipeline::detected_basis(core::GateLabel gate, int k) {
  const auto key = std::make_pair(static_cast<int>(gate), k);
  auto it = detected_cache_.find(key);
  if (it != detected_cache_.end()) return it->second;
  if (core::gate_qubits(gate) != 1) {
    throw DomainError("single-qubit pipeline: gate " + std::string(core::to_string(gate)) +
                      " acts on two qubits");
  }
  const pulse::PulseSchedule s = pulse::build_schedule(gate, options_.schedule);
  const double t_slot = pulse::gate_slot_start(s);
  const pulse::OutputBin& bin = s.bin("P1");
  dynamics::EvolveOptions eo = options_.evolve_options(t_slot, bin.t_stop);
  eo.detector = dynamics::ReferenceMode::sech(options_.schedule.bandwidth,
                                              0.5 * (bin.t_start + bin.t_stop),
                                              options_.schedule.t_cut());
  const auto traj = dynamics::evolve(options_.detector_model(), s,
                                     with_detector(slot_state_basis(k)), eo);
  return detected_cache_.emplace(key, detector_block(traj.final_state)).first->second;
}

tomography::MomentSet SingleQubitPipeline::output_moments(core::GateLabel gate,
                                                          const Matrix& input) {
  const auto c = basis_coefficients(input);
  Matrix field = Matrix::Zero(2, 2);
  for (int k = 0; k < 4; ++k) field += c[static_cast<std::size_t>(k)] * detected_basis(gate, k);
  tomography::MomentSet m = tomography::moments_of_state(core::QuantumState(field, {2}), "sech");
  if (options_.normalize) m = tomography::normalize_moments(m, reference_number());
  return m;
}

core::QuantumState SingleQubitPipeline::output_state(core::GateLabel gate,
                                                     const std::string& label) {
  return tomography::reconstruct_qubit_state(
      output_moments(gate, tomography::cardinal_state(label)));
}

tomography::ProcessTomographyResult SingleQubitPipeline::tomography(core::GateLabel gate,
                                                                     double internal_eta) {
  tomography::TomographyOptions to;
  to.internal_eta = internal_eta;
  return tomography::process_tomography(
      gate, [&](const std::string& label) { return output_state(gate, label); }, to);
}

}  // namespace photongate::experiments
