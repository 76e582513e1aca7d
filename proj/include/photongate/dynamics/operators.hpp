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

#ifndef PHOTONGATE_DYNAMICS_OPERATORS_HPP
#define PHOTONGATE_DYNAMICS_OPERATORS_HPP

#include <vector>

#include "photongate/dynamics/device.hpp"
#include "photongate/pulse/schedule.hpp"

namespace photongate::dynamics {

/// Control values at one instant. Couplings are complex rates in rad/ns.
struct Controls {
  Complex source_coupling{};
  Complex gate_coupling{};
  double cphase_rate = 0.0;
  double cphase_detuning = 0.0;
  Complex detector_coupling{};

  static Controls at(const pulse::PulseSchedule& schedule, double t);
};

/// Sparse operators of a cascaded model, built once per model.
class ModelOperators {
 public:
  explicit ModelOperators(const CascadedModel& model);

  const CascadedModel& model() const { return model_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return dim_; }

  const SparseMatrix& lowering(Subsystem s) const;
  const SparseMatrix& number(Subsystem s) const;
  /// Anharmonicity, static cascade term and converter detuning.
  const SparseMatrix& static_hamiltonian() const { return h_static_; }
  /// exp(i phi0) a b^dag on a chip.
  const SparseMatrix& swap(pulse::Chip chip) const;
  /// |f0><e1| on the gate chip.
  const SparseMatrix& cphase_transition() const { return cphase_; }
  const SparseMatrix& gate_f_projector() const { return f_gate_; }
  /// Field leaving the cascade towards the detector line, c1.
  const SparseMatrix& output_operator() const { return c1_; }
  /// Field lost in the link, c2.
  const SparseMatrix& loss_operator() const { return c2_; }
  /// c1, c2, then relaxation and dephasing of source and gate transmons.
  const std::vector<SparseMatrix>& collapse() const { return collapse_; }

  /// Hermitian Hamiltonian including detector cascade terms.
  SparseMatrix hamiltonian(const Controls& controls) const;
  /// Collapse operators with the detector folded into c1.
  std::vector<SparseMatrix> collapse(const Controls& controls) const;
  /// Unitary of an instantaneous g-e rotation on a chip's transmon.
  SparseMatrix rotation(const pulse::Rotation& rotation) const;

 private:
  CascadedModel model_;
  std::vector<int> dims_;
  int dim_;
  std::vector<SparseMatrix> lowering_;
  std::vector<SparseMatrix> number_;
  SparseMatrix h_static_;
  SparseMatrix swap_source_;
  SparseMatrix swap_gate_;
  SparseMatrix cphase_;
  SparseMatrix f_gate_;
  SparseMatrix c1_;
  SparseMatrix c2_;
  std::vector<SparseMatrix> collapse_;
};

/// Dense Hamiltonian for the given controls.
Matrix build_hamiltonian(const CascadedModel& model, const Controls& controls);
/// Dense Hamiltonian at time t of a schedule.
Matrix build_hamiltonian(const CascadedModel& model, const pulse::PulseSchedule& schedule,
                         double t);
/// Dense collapse operators in the order of ModelOperators::collapse().
std::vector<Matrix> collapse_ops(const CascadedModel& model);

/// Annihilation operator of a d-level oscillator.
Matrix lowering_matrix(int levels);

}  // namespace photongate::dynamics

#endif  // PHOTONGATE_DYNAMICS_OPERATORS_HPP
