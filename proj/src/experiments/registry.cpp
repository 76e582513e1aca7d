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

#include "photongate/experiments/registry.hpp"

#include <algorithm>

#include "photongate/core/types.hpp"

namespace photongate::experiments {

const std::vector<ExperimentInfo>& list_experiments() {
  static const std::vector<ExperimentInfo> registry = {
      {"fig2c", "field amplitude of |+> photons: gate-direct, source-detuned, absorb-reemit", ""},
      {"fig3a", "reflected P2 amplitude for the gate in |g> and |e> under the f0-e1 drive", ""},
      {"bell", "two-mode Bell state from the composite CPHASE model", ""},
      {"qpt-i", "process tomography of the identity gate", ""},
      {"qpt-x", "process tomography of the X gate", ""},
      {"qpt-y", "process tomography of the Y gate", ""},
      {"qpt-t", "process tomography of the T gate", ""},
      {"qpt-cphase", "two-qubit process tomography of the composite CPHASE gate", ""},
      {"fig5", "Lorentzian linewidth fits of both converters", ""},
      {"mollow", "joint Mollow-triplet fit of the link efficiency", ""},
      {"fig6", "e0-g1 chevron, damped swaps and the coupling calibration J(A)", "amplitude"},
      {"fig7a", "transfer population versus converter detuning", "detuning_mhz"},
      {"fig7b", "transfer population versus absorption delay", "delay_ns"},
      {"fig7c", "Ramsey-type fringe versus input phase", "phase_rad"},
      {"fig10", "f0-e1 chevron and damped oscillation at the CPHASE drive rate", ""},
  };
  return registry;
}

bool is_registered(std::string_view name) {
  const auto& r = list_experiments();
  return std::any_of(r.begin(), r.end(), [&](const ExperimentInfo& e) { return e.name == name; });
}

const ExperimentInfo& experiment_info(std::string_view name) {
  for (const auto& e : list_experiments()) {
    if (e.name == name) return e;
  }
  throw DomainError("unknown experiment '" + std::string(name) + "'");
}

}  // namespace photongate::experiments
