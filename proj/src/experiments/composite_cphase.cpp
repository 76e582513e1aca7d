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

#include "photongate/experiments/composite_cphase.hpp"

#include <cmath>

#include "photongate/dynamics/reflection.hpp"
#include "photongate/pulse/mode.hpp"
#include "photongate/tomography/reconstruct.hpp"

namespace photongate::experiments {

namespace {

pulse::ScheduleOptions composite_schedule(const CompositeOptions& o) {
  pulse::ScheduleOptions s = o.pipeline.schedule;
  if (!o.drive) s.cphase_rate = 0.0;
  return s;
}

/// Projector on gate transmon level k in the bare model.
SparseMatrix level_projector(const dynamics::CascadedModel& model, int k) {
  Matrix p = Matrix::Zero(3, 3);
  p(k, k) = 1.0;
  return core::embed(p, model.dims(), dynamics::kGateQubit).sparseView();
}

}  // namespace

ReflectionFactors reflection_factors(const CompositeOptions& o) {
  ReflectionFactors f;
  if (o.ideal_reflection) {
    const std::array<Complex, 3> c = o.drive ? std::array<Complex, 3>{1.0, -1.0, 1.0}
                                             : std::array<Complex, 3>{1.0, 1.0, 1.0};
    f.coherence = c;
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) f.gram(k, l) = c[k] * std::conj(c[l]);
    }
    return f;
  }
  const auto& so = o.pipeline.schedule;
  const pulse::TemporalMode xi = pulse::sech_mode(so.bandwidth, so.dt, so.t_cut()).normalized();
  const double kappa = o.pipeline.model.gate.kappa();
  // Without the drive every level sees the bare converter.
  const double g = o.drive ? so.cphase_rate : 0.0;
  const pulse::TemporalMode out_g =
      dynamics::reflect_mode(xi, kappa, g, dynamics::GateState::Ground, o.pad_factor);
  const pulse::TemporalMode out_e = dynamics::reflect_mode(
      xi, kappa, g, o.drive ? dynamics::GateState::Excited : dynamics::GateState::Ground,
      o.pad_factor);
  const std::array<const pulse::TemporalMode*, 3> modes{&out_g, &out_e, &out_g};
  // P2 is detected in the mode reflected off |g>, which counts as unflipped.
  for (int k = 0; k < 3; ++k) f.coherence[k] = pulse::mode_overlap(out_g, *modes[k]);
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) f.gram(k, l) = pulse::mode_overlap(*modes[l], *modes[k]);
  }
  return f;
}

CompositeCphase::CompositeCphase(CompositeOptions options)
    : options_(std::move(options)),
      schedule_(pulse::build_schedule(core::GateLabel::CPHASE, composite_schedule(options_))),
      factors_(reflection_factors(options_)) {
  options_.pipeline.model.validate();
  const pulse::OutputBin& p2 = schedule_.bin("P2");
  t_mid_ = 0.5 * (p2.t_start + p2.t_stop) + std::max(0.0, options_.pipeline.schedule.delay);
}

double CompositeCphase::reference_number() {
  if (!n_ref_) n_ref_ = reference_photon_number(options_.pipeline);
  return *n_ref_;
}

double CompositeCphase::source_number() {
  if (!n_src_) n_src_ = source_photon_number(options_.pipeline);
  return *n_src_;
}

Matrix CompositeCphase::propagate(const Matrix& op) {
  const PipelineOptions& po = options_.pipeline;
  const pulse::OutputBin& p1 = schedule_.bin("P1");
  const auto idle = dynamics::evolve(po.bare_model(), schedule_, op,
                                     po.evolve_options(t_mid_, p1.t_start));
  dynamics::EvolveOptions eo = po.evolve_options(p1.t_start, p1.t_stop);
  eo.detector = dynamics::ReferenceMode::sech(po.schedule.bandwidth,
                                              0.5 * (p1.t_start + p1.t_stop), po.schedule.t_cut());
  const auto emit = dynamics::evolve(po.detector_model(), schedule_,
                                     with_detector(idle.final_state), eo);
  return detector_block(emit.final_state);
}

const CompositeCphase::Propagated& CompositeCphase::propagated(int k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  const PipelineOptions& po = options_.pipeline;
  const dynamics::CascadedModel model = po.bare_model();
  const Matrix rho0 =
      dynamics::product_state(model, prepared_qubit(basis_labels()[static_cast<std::size_t>(k)]),
                              dynamics::qubit_vector(1.0, 0.0));
  const Matrix rho =
      dynamics::evolve(model, schedule_, rho0, po.evolve_options(0.0, t_mid_)).final_state;

  std::array<SparseMatrix, 3> proj;
  for (int l = 0; l < 3; ++l) proj[l] = level_projector(model, l);
  SparseMatrix c = Complex(factors_.coherence[0]) * proj[0];
  for (int l = 1; l < 3; ++l) c += factors_.coherence[l] * proj[l];
  Matrix lost = Matrix::Zero(rho.rows(), rho.cols());
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const Complex perp =
          factors_.gram(a, b) - factors_.coherence[a] * std::conj(factors_.coherence[b]);
      if (std::abs(perp) < 1e-15) continue;
      lost += perp * (proj[a] * rho * proj[b]);
    }
  }
  const Matrix c_dag = Matrix(c.adjoint());
  const Matrix mixed = rho * c_dag;
  const Matrix h1 = 0.5 * (mixed + mixed.adjoint());
  const Matrix h2 = Complex(0.0, -0.5) * (mixed - mixed.adjoint());

  Propagated p;
  p.plain = propagate(rho);
  p.lost = lost.norm() > 1e-14 ? propagate(core::hermitian_part(lost)) : Matrix::Zero(2, 2);
  p.reflected = propagate(c * rho * c_dag);
  p.mixed = propagate(h1) + kI * propagate(h2);
  return cache_.emplace(k, std::move(p)).first->second;
}

Matrix CompositeCphase::output_field(const Matrix& p1, const Matrix& p2_in) {
  // P2 arrives through the same lossy emission and link as a source photon.
  const double n_src = std::min(1.0, source_number());
  const core::QuantumState p2 = core::apply_channel(core::QuantumState(p2_in, {2}),
                                                    core::loss_channel(n_src), 0);
  const Matrix& q = p2.matrix();
  const auto coeff = basis_coefficients(p1);
  Matrix v00 = Matrix::Zero(2, 2);
  Matrix v11 = Matrix::Zero(2, 2);
  Matrix v01 = Matrix::Zero(2, 2);
  for (int k = 0; k < 4; ++k) {
    const Complex w = coeff[static_cast<std::size_t>(k)];
    if (std::abs(w) < 1e-14) continue;
    const Propagated& p = propagated(k);
    v00 += w * (q(0, 0) * p.plain + q(1, 1) * p.lost);
    v11 += w * q(1, 1) * p.reflected;
    v01 += w * q(0, 1) * p.mixed;
  }
  // V(B_10) = V(B_01)^dag since the map preserves adjoints.
  const Matrix v10 = v01.adjoint();
  Matrix field(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      field(2 * a + 0, 2 * b + 0) = v00(a, b);
      field(2 * a + 1, 2 * b + 1) = v11(a, b);
      field(2 * a + 0, 2 * b + 1) = v01(a, b);
      field(2 * a + 1, 2 * b + 0) = v10(a, b);
    }
  }
  return field;
}

tomography::MomentSet CompositeCphase::output_moments(const Matrix& p1, const Matrix& p2) {
  tomography::MomentSet m =
      tomography::moments_of_state(core::QuantumState(output_field(p1, p2), {2, 2}), "sech");
  if (options_.pipeline.normalize) m = tomography::normalize_moments(m, reference_number(), 1.0);
  return m;
}

core::QuantumState CompositeCphase::output_state(const Matrix& p1, const Matrix& p2) {
  return tomography::reconstruct_two_mode_state(output_moments(p1, p2));
}

core::QuantumState CompositeCphase::output_state(const std::string& label) {
  const auto comma = label.find(',');
  if (comma == std::string::npos) {
    throw DomainError("composite CPHASE: input label '" + label + "' must be written 'p1,p2'");
  }
  return output_state(tomography::cardinal_state(label.substr(0, comma)),
                      tomography::cardinal_state(label.substr(comma + 1)));
}

tomography::ProcessTomographyResult CompositeCphase::tomography(double internal_eta,
                                                                std::vector<std::string> inputs) {
  tomography::TomographyOptions to;
  to.internal_eta = internal_eta;
  to.inputs = std::move(inputs);
  return tomography::process_tomography(
      core::GateLabel::CPHASE, [&](const std::string& label) { return output_state(label); }, to);
}

}  // namespace photongate::experiments
