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

#ifndef PHOTONGATE_EXPERIMENTS_PIPELINE_HPP
#define PHOTONGATE_EXPERIMENTS_PIPELINE_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "photongate/dynamics/evolve.hpp"
#include "photongate/pulse/schedule.hpp"
#include "photongate/tomography/moments.hpp"
#include "photongate/tomography/process_tomography.hpp"

namespace photongate::experiments {

struct PipelineOptions {
  dynamics::CascadedModel model;
  pulse::ScheduleOptions schedule = pulse::ScheduleOptions::defaults();
  double rtol = 1e-6;
  double atol = 1e-8;
  /// Divide detected moments by the gate-direct reference photon number.
  bool normalize = true;

  dynamics::CascadedModel bare_model() const;      // no detector
  dynamics::CascadedModel detector_model() const;  // with detector
  dynamics::EvolveOptions evolve_options(double t_start, double t_stop) const;
};

/// Coefficients of a 2x2 operator in the spanning set {|0><0|, |1><1|, |+><+|, |+i><+i|}.
std::array<Complex, 4> basis_coefficients(const Matrix& rho);
/// Labels of that spanning set.
const std::array<std::string, 4>& basis_labels();

/// Transmon 3-vector prepared from |g> by the cardinal preparation pulses.
Vector prepared_qubit(const std::string& label);

/// Appends the detector in vacuum to a state of the bare model.
Matrix with_detector(const Matrix& rho);
/// Detector state (2x2) of a state of the detector model.
Matrix detector_block(const Matrix& rho);

/// Photon number captured in the sech mode when the gate qubit emits
/// directly from |e> with the gate shaping waveform.
double reference_photon_number(const PipelineOptions& options);
/// Same for the source qubit with the gate converter out of the line; includes
/// the link transmission.
double source_photon_number(const PipelineOptions& options);

/// Emit, absorb, gate slot, re-emit, detect. Stage outputs are cached, and
/// the six cardinal inputs are assembled from four runs by linearity.
class SingleQubitPipeline {
 public:
  explicit SingleQubitPipeline(PipelineOptions options);

  const PipelineOptions& options() const { return options_; }
  double reference_number();

  /// Full bare-model state at the start of the gate slot for a source input.
  Matrix slot_state(const Matrix& input);
  /// Detected moments (normalized when enabled) for a 2x2 source input.
  tomography::MomentSet output_moments(core::GateLabel gate, const Matrix& input);
  core::QuantumState output_state(core::GateLabel gate, const std::string& label);
  tomography::ProcessTomographyResult tomography(core::GateLabel gate,
                                                 double internal_eta = 0.75);

 private:
  Matrix slot_state_basis(int k);
  Matrix detected_basis(core::GateLabel gate, int k);

  PipelineOptions options_;
  std::optional<double> n_ref_;
  std::map<int, Matrix> slot_cache_;
  std::map<std::pair<int, int>, Matrix> detected_cache_;
};

}  // namespace photongate::experiments

#endif  // PHOTONGATE_EXPERIMENTS_PIPELINE_HPP
