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

#ifndef PHOTONGATE_EXPERIMENTS_SCENARIOS_HPP
#define PHOTONGATE_EXPERIMENTS_SCENARIOS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "photongate/dynamics/reflection.hpp"
#include "photongate/experiments/composite_cphase.hpp"
#include "photongate/experiments/pipeline.hpp"
#include "photongate/fitting/fits.hpp"

namespace photongate::experiments {

/// Columnar data written as CSV with a header row.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  void write_csv(std::ostream& os) const;
};

struct ExperimentSpec {
  std::string name;
  dynamics::CascadedModel model;
  pulse::ScheduleOptions schedule = pulse::ScheduleOptions::defaults();
  std::string sweep_parameter;  // empty: the scenario's own axis
  std::vector<double> sweep_values;  // empty: scenario defaults
  std::uint64_t seed = 1;
  int threads = 1;

  PipelineOptions pipeline() const;
  void validate() const;
};

struct ExperimentReport {
  std::string name;
  nlohmann::json metadata = nlohmann::json::object();
  nlohmann::json points = nlohmann::json::array();  // one entry per sweep point
  nlohmann::json summary = nlohmann::json::object();
  std::map<std::string, Table> tables;
};

/// Runs fn(0..n-1) on up to `threads` workers; results keep index order.
template <typename T>
std::vector<T> parallel_map(int n, int threads, const std::function<T(int)>& fn);

// ---- temporal profiles -------------------------------------------------

struct Trace {
  std::vector<double> times;  // relative to the emission bin start
  std::vector<Complex> amplitude;
  double peak() const;  // largest |Re|
};

struct TemporalProfiles {
  Trace gate_direct;
  Trace source_detuned;
  Trace absorb_reemit;
  double source_ratio = 0.0;  // source-detuned / gate-direct peak
  double reemit_drop = 0.0;   // 1 - absorb-reemit / source-detuned peak
};

TemporalProfiles temporal_profiles(const PipelineOptions& options);

// ---- calibration sweeps ------------------------------------------------

/// Gate |e> population at the start of the gate slot with the source in |e>.
double transfer_population(const PipelineOptions& options);
std::vector<double> detuning_sweep(const PipelineOptions& options,
                                   const std::vector<double>& detuning_mhz, int threads = 1);
std::vector<double> delay_sweep(const PipelineOptions& options, const std::vector<double>& delay_ns,
                                int threads = 1);
/// Gate |e> population after transferring (|0> + e^{i phi}|1>)/sqrt2 and a
/// final Y(pi/2) on the gate.
std::vector<double> phase_sweep(const PipelineOptions& options, const std::vector<double>& phase);

// ---- reflection and CPHASE ---------------------------------------------

struct ReflectionTrace {
  Trace input;      // source photon with the gate converter out of the line
  Trace reflected;  // same photon reflected while driving |f0> <-> |e1>
  double sign = 0.0;     // sign of the real-part overlap of reflected and input
  double overlap = 0.0;  // normalized |<input|reflected>|
  double mode_overlap = 0.0;  // |<xi|S11 xi>| from the frequency-domain model
};

ReflectionTrace cphase_reflection(const PipelineOptions& options, dynamics::GateState state);
/// Same, reusing an input trace from reflection_input().
ReflectionTrace cphase_reflection(const PipelineOptions& options, dynamics::GateState state,
                                  const Trace& input);
/// Source photon with the gate converter out of the line.
Trace reflection_input(const PipelineOptions& options);

struct BellResult {
  core::QuantumState state;
  double fidelity = 0.0;
};

/// (|0,+> + |1,->)/sqrt2 on modes (P1, P2).
Vector bell_target();
BellResult bell_state(CompositeOptions options);

// ---- fits on synthetic calibration data --------------------------------

/// J(A) in rad/ns used to generate coupler calibration data.
pulse::CouplerCalibration synthetic_calibration();

/// Synthetic |S21| (1 % noise of the peak) at kappa/2pi = kappa_mhz, fitted.
fitting::FitResult lorentzian_round_trip(double kappa_mhz, std::uint64_t seed,
                                         double noise = 0.01);

/// Synthetic Mollow traces for both devices, P0 ratio eta, 1 % noise of each
/// trace peak; `scale` multiplies both devices' P0.
fitting::LinkEfficiencyFit mollow_round_trip(double eta, double kappa_source, double kappa_gate,
                                             std::uint64_t seed, double noise = 0.01,
                                             double scale = 1.0);

/// Runs the scenario `spec.name`.
ExperimentReport run_scenario(const ExperimentSpec& spec);

}  // namespace photongate::experiments

#include "photongate/experiments/parallel.ipp"

#endif  // PHOTONGATE_EXPERIMENTS_SCENARIOS_HPP
