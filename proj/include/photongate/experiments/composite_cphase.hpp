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

#ifndef PHOTONGATE_EXPERIMENTS_COMPOSITE_CPHASE_HPP
#define PHOTONGATE_EXPERIMENTS_COMPOSITE_CPHASE_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "photongate/experiments/pipeline.hpp"

namespace photongate::experiments {

/// Overlaps of the reflected P2 modes, indexed by the gate transmon level
/// (g, e, f; f reflects like g).
struct ReflectionFactors {
  std::array<Complex, 3> coherence{};  // <xi_ref | xi_k>
  Eigen::Matrix3cd gram;               // <xi_k' | xi_k> at (k, k')
};

struct CompositeOptions {
  PipelineOptions pipeline;
  /// S11 = -1 for g and +1 for e over the whole band.
  bool ideal_reflection = false;
  /// false: the drive segment is removed and no reflection phase is imprinted.
  bool drive = true;
  int pad_factor = 4;
};

/// Two-photon CPHASE with the P1 photon handled by the Lindblad model and P2
/// as a single-rail mode reflected off the gate converter. Output modes are
/// ordered (P1, P2); labels are written "p1,p2".
class CompositeCphase {
 public:
  explicit CompositeCphase(CompositeOptions options);

  const CompositeOptions& options() const { return options_; }
  const ReflectionFactors& factors() const { return factors_; }
  double reference_number();
  double source_number();

  /// Joint (P1, P2) field state, 4x4, before moment normalization.
  Matrix output_field(const Matrix& p1, const Matrix& p2);
  tomography::MomentSet output_moments(const Matrix& p1, const Matrix& p2);
  core::QuantumState output_state(const std::string& label);
  core::QuantumState output_state(const Matrix& p1, const Matrix& p2);

  tomography::ProcessTomographyResult tomography(double internal_eta = 0.75,
                                                 std::vector<std::string> inputs = {});

 private:
  struct Propagated {
    Matrix plain;      // V(rho)
    Matrix lost;       // V(sum_kk' G_perp P_k rho P_k')
    Matrix reflected;  // V(C rho C^dag)
    Matrix mixed;      // V(rho C^dag)
  };
  const Propagated& propagated(int k);
  Matrix propagate(const Matrix& op);

  CompositeOptions options_;
  pulse::PulseSchedule schedule_;
  ReflectionFactors factors_;
  double t_mid_ = 0.0;
  std::optional<double> n_ref_;
  std::optional<double> n_src_;
  std::map<int, Propagated> cache_;
};

ReflectionFactors reflection_factors(const CompositeOptions& options);

}  // namespace photongate::experiments

#endif  // PHOTONGATE_EXPERIMENTS_COMPOSITE_CPHASE_HPP
