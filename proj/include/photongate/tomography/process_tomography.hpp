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

#ifndef PHOTONGATE_TOMOGRAPHY_PROCESS_TOMOGRAPHY_HPP
#define PHOTONGATE_TOMOGRAPHY_PROCESS_TOMOGRAPHY_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "photongate/core/process.hpp"
#include "photongate/core/state.hpp"

namespace photongate::tomography {

/// Single-rail density matrix of a cardinal state: "0", "1", "+", "-", "+i", "-i".
Matrix cardinal_state(std::string_view label);

/// Product of cardinal states; two-qubit labels are written "a,b".
Matrix input_state(std::string_view label);

/// All 6^n product labels, first qubit slowest.
std::vector<std::string> cardinal_inputs(int n_qubits);
/// The 4^n labels built from {0, 1, +, +i}, enough for a full inversion.
std::vector<std::string> minimal_inputs(int n_qubits);

/// Least-squares chi (not yet projected) with sum_mn chi_mn P_m rho P_n^dag
/// reproducing the outputs. Throws NumericalError if the inputs do not span
/// the operator space.
Matrix fit_chi(const std::vector<Matrix>& inputs, const std::vector<Matrix>& outputs,
               int n_qubits);

struct TomographyOptions {
  double internal_eta = 0.75;  // loss applied to every input for chi_int
  std::vector<std::string> inputs;  // empty: all cardinal products
};

struct ProcessTomographyResult {
  core::GateLabel gate = core::GateLabel::I;
  std::vector<std::string> inputs;
  std::vector<core::QuantumState> outputs;
  core::ProcessMap chi_meas;
  core::ProcessMap chi_int;
  core::ProcessMap chi_ideal;
  double f_tot = 0.0;
  double f_int = 0.0;
  double projection_distance_meas = 0.0;
  double projection_distance_int = 0.0;

  nlohmann::json to_json() const;
};

/// Output state of the gate for one input label.
using TomographyRunner = std::function<core::QuantumState(const std::string& input)>;

ProcessTomographyResult process_tomography(core::GateLabel gate, const TomographyRunner& runner,
                                           const TomographyOptions& options = {});

/// Same, from precomputed outputs (one per label in `inputs`).
ProcessTomographyResult process_tomography(core::GateLabel gate,
                                           const std::vector<std::string>& inputs,
                                           const std::vector<core::QuantumState>& outputs,
                                           double internal_eta = 0.75);

}  // namespace photongate::tomography

#endif  // PHOTONGATE_TOMOGRAPHY_PROCESS_TOMOGRAPHY_HPP
