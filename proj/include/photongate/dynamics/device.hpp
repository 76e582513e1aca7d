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

#ifndef PHOTONGATE_DYNAMICS_DEVICE_HPP
#define PHOTONGATE_DYNAMICS_DEVICE_HPP

#include <vector>

#include "photongate/core/types.hpp"

namespace photongate::dynamics {

/// Transmon, coupler and converter parameters of one chip, in lab units.
struct DeviceParams {
  double omega_ge_ghz = 0.0;
  double omega_ef_ghz = 0.0;
  double alpha_mhz = 0.0;  // omega_ef = omega_ge - alpha
  double t1_e_us = 0.0;
  double t1_f_us = 0.0;
  double t2_e_us = 0.0;  // T2* of e
  double t2_f_us = 0.0;  // T2* of f
  double omega_c_ghz = 0.0;
  double omega_01_ghz = 0.0;
  double kappa_mhz = 0.0;  // kappa / 2pi

  static DeviceParams source_defaults();
  static DeviceParams gate_defaults();

  /// Throws DomainError naming the offending field.
  void validate() const;

  double kappa() const { return mhz_to_rad_per_ns(kappa_mhz); }
  double alpha() const { return mhz_to_rad_per_ns(alpha_mhz); }
  double relaxation_e() const { return 1.0 / (t1_e_us * 1e3); }
  double relaxation_f() const { return 1.0 / (t1_f_us * 1e3); }
  /// 1/T2* - 1/(2 T1), in 1/ns.
  double dephasing_e() const;
  double dephasing_f() const;

  /// Converter minus qubit g-e frequency, MHz.
  double converter_detuning_mhz() const { return (omega_01_ghz - omega_ge_ghz) * 1e3; }
  /// Detuning of the |f0> <-> |e1> transition, MHz.
  double cphase_detuning_mhz() const { return converter_detuning_mhz() + alpha_mhz; }
};

/// Subsystem order of the cascaded model.
enum Subsystem : int {
  kSourceQubit = 0,
  kSourceConverter = 1,
  kGateQubit = 2,
  kGateConverter = 3,
  kDetector = 4,
};

/// Two chips joined by a lossy circulator.
struct CascadedModel {
  DeviceParams source = DeviceParams::source_defaults();
  DeviceParams gate = DeviceParams::gate_defaults();
  double eta = 0.75;  // transmission probability of the link
  bool decoherence = true;
  /// False for a far-detuned gate converter: b_G leaves the cascade and the
  /// gate swap coupling is ignored.
  bool gate_in_cascade = true;
  /// Appends a two-level virtual detector cavity after the gate chip.
  bool virtual_detector = false;
  /// Gate converter detuning in the rotating frame, rad/ns.
  double gate_converter_detuning = 0.0;
  /// Base phase of the swap couplings.
  double coupler_phase = 0.5 * kPi;

  std::vector<int> dims() const;
  int dim() const;
  void validate() const;
};

}  // namespace photongate::dynamics

#endif  // PHOTONGATE_DYNAMICS_DEVICE_HPP
