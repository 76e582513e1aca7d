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

#include "photongate/dynamics/device.hpp"

#include <cmath>

namespace photongate::dynamics {

DeviceParams DeviceParams::source_defaults() {
  DeviceParams p;
  p.omega_ge_ghz = 5.925;
  p.omega_ef_ghz = 5.630;
  p.alpha_mhz = 295.0;
  p.t1_e_us = 16.0;
  p.t1_f_us = 6.0;
  p.t2_e_us = 4.0;
  p.t2_f_us = 2.0;
  p.omega_c_ghz = 3.2;
  p.omega_01_ghz = 5.998;
  p.kappa_mhz = 1.8;
  return p;
}

DeviceParams DeviceParams::gate_defaults() {
  DeviceParams p;
  p.omega_ge_ghz = 5.771;
  p.omega_ef_ghz = 5.478;
  p.alpha_mhz = 301.7;
  p.t1_e_us = 13.0;
  p.t1_f_us = 4.0;
  p.t2_e_us = 10.0;
  p.t2_f_us = 2.0;
  p.omega_c_ghz = 4.6;
  p.omega_01_ghz = 5.998;
  p.kappa_mhz = 2.1;
  return p;
}

void DeviceParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string("device parameter ") + name + " must be positive");
    }
  };
  positive(omega_ge_ghz, "omega_ge");
  positive(omega_ef_ghz, "omega_ef");
  positive(alpha_mhz, "alpha");
  positive(t1_e_us, "t1_e");
  positive(t1_f_us, "t1_f");
  positive(t2_e_us, "t2_e");
  positive(t2_f_us, "t2_f");
  positive(omega_c_ghz, "omega_c");
  positive(omega_01_ghz, "omega_01");
  positive(kappa_mhz, "kappa");
  if (t2_e_us > 2.0 * t1_e_us) throw DomainError("device parameter t2_e exceeds 2 t1_e");
  if (t2_f_us > 2.0 * t1_f_us) throw DomainError("device parameter t2_f exceeds 2 t1_f");
}

double DeviceParams::dephasing_e() const {
  return std::max(0.0, 1.0 / (t2_e_us * 1e3) - 0.5 * relaxation_e());
}

double DeviceParams::dephasing_f() const {
  return std::max(0.0, 1.0 / (t2_f_us * 1e3) - 0.5 * relaxation_f());
}

std::vector<int> CascadedModel::dims() const {
  std::vector<int> d{3, 2, 3, 2};
  if (virtual_detector) d.push_back(2);
  return d;
}

int CascadedModel::dim() const { return virtual_detector ? 72 : 36; }

void CascadedModel::validate() const {
  source.validate();
  gate.validate();
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("link efficiency eta must lie in [0, 1]");
  if (!std::isfinite(gate_converter_detuning) || !std::isfinite(coupler_phase)) {
    throw DomainError("model detuning and coupler phase must be finite");
  }
}

}  // namespace photongate::dynamics
