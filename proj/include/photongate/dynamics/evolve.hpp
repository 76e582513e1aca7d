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

#ifndef PHOTONGATE_DYNAMICS_EVOLVE_HPP
#define PHOTONGATE_DYNAMICS_EVOLVE_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "photongate/core/state.hpp"
#include "photongate/dynamics/operators.hpp"

namespace photongate::dynamics {

/// Temporal mode picked up by the virtual detector cavity. The detector
/// coupling -conj(xi)/sqrt(cumulative) absorbs exactly this mode.
struct ReferenceMode {
  double t_start = 0.0;
  double t_stop = 0.0;
  std::function<Complex(double)> amplitude;
  /// Integral of |xi|^2 from -infinity to t; must stay positive on the window.
  std::function<double(double)> cumulative;

  Complex coupling(double t) const;

  /// Phase * sech mode of bandwidth gamma centred at `center`, captured on
  /// [center - t_cut, center + t_cut].
  static ReferenceMode sech(double gamma, double center, double t_cut, Complex phase = 1.0);
};

struct EvolveOptions {
  double t_start = 0.0;
  double t_stop = -1.0;  // negative: end of the schedule
  double dt_out = 1.0;
  double rtol = 1e-8;
  double atol = 1e-10;
  bool store_states = false;
  std::optional<ReferenceMode> detector;
};

struct TrajectoryResult {
  std::vector<int> dims;
  std::vector<double> times;
  /// Tr(c1 rho(t)), the mean field leaving the cascade, 1/sqrt(ns).
  std::vector<Complex> output_amplitude;
  /// populations[k][offset(s) + level]
  std::vector<std::vector<double>> populations;
  std::vector<double> traces;
  std::vector<Matrix> states;
  Matrix final_state;
  /// Integral of <c1^dag c1> + <c2^dag c2> with the bare output operator.
  double leaked = 0.0;

  double population(std::size_t sample, int subsystem, int level) const;
  core::QuantumState final() const { return core::QuantumState(final_state, dims); }
  /// t, Re/Im output amplitude, then one column per subsystem level.
  void write_csv(std::ostream& os) const;
};

/// Lindblad evolution under a pulse schedule. Controls are piecewise constant
/// between schedule breakpoints; rotations at time t in [t_start, t_stop) are
/// applied before integrating from t.
TrajectoryResult evolve(const ModelOperators& ops, const pulse::PulseSchedule& schedule,
                        const Matrix& rho0, const EvolveOptions& options = {});
TrajectoryResult evolve(const CascadedModel& model, const pulse::PulseSchedule& schedule,
                        const Matrix& rho0, const EvolveOptions& options = {});

/// Tr(c1 rho) for every stored state. Requires store_states.
std::vector<Complex> output_amplitude(const TrajectoryResult& trajectory,
                                      const CascadedModel& model);

/// Product state: source and gate transmon states (3-vectors), converters
/// and detector in vacuum.
Matrix product_state(const CascadedModel& model, const Vector& source_qubit,
                     const Vector& gate_qubit);
Matrix ground_state(const CascadedModel& model);
/// Transmon state a|g> + b|e>.
Vector qubit_vector(Complex g, Complex e);

}  // namespace photongate::dynamics

#endif  // PHOTONGATE_DYNAMICS_EVOLVE_HPP
