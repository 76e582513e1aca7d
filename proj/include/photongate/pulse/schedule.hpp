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

#ifndef PHOTONGATE_PULSE_SCHEDULE_HPP
#define PHOTONGATE_PULSE_SCHEDULE_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "photongate/core/process.hpp"
#include "photongate/pulse/coupling.hpp"

namespace photongate::pulse {

enum class Chip { Source, Gate };
enum class Axis { X, Y };

std::string_view to_string(Chip c);
std::string_view to_string(Axis a);

struct CouplingSegment {
  Chip chip = Chip::Source;
  CouplingWaveform waveform;  // absolute times
};

/// Resonant |f0> <-> |e1> drive on the gate chip, constant rate g.
struct CphaseSegment {
  double rate = 0.0;       // rad/ns
  double duration = 0.0;   // ns
  double detuning = 0.0;   // rad/ns, offset of the drive from resonance
};

/// Instantaneous rotation exp(-i angle sigma_axis / 2) on the g-e subspace.
struct Rotation {
  Chip chip = Chip::Gate;
  Axis axis = Axis::X;
  double angle = 0.0;
};

struct Idle {
  Chip chip = Chip::Gate;
  double duration = 0.0;
};

/// Drive-frame shift; later coupler pulses on the chip pick up exp(i r phase).
struct FramePhase {
  Chip chip = Chip::Gate;
  double phase = 0.0;
};

struct ScheduleEvent {
  double t_start = 0.0;
  std::variant<CouplingSegment, CphaseSegment, Rotation, Idle, FramePhase> payload;

  std::string channel() const;
  std::string_view kind() const;
  double duration() const;
  double t_stop() const { return t_start + duration(); }
};

/// Time window in which a photonic qubit leaves the gate chip.
struct OutputBin {
  std::string label;
  double t_start = 0.0;
  double t_stop = 0.0;
};

class PulseSchedule {
 public:
  explicit PulseSchedule(double frame_ratio = 1.0);

  /// Inserts in time order; rejects overlaps with events on the same channel.
  void add(ScheduleEvent event);
  void add_bin(OutputBin bin);

  const std::vector<ScheduleEvent>& events() const { return events_; }
  const std::vector<OutputBin>& bins() const { return bins_; }
  const OutputBin& bin(std::string_view label) const;
  double frame_ratio() const { return frame_ratio_; }
  double duration() const;

  /// Complex swap coupling J(t) exp(i r sum(frame phases up to t)).
  Complex coupling_at(Chip chip, double t) const;
  double frame_phase_at(Chip chip, double t) const;
  /// Active CPHASE segment at t, or nullptr.
  const CphaseSegment* cphase_at(double t) const;

  /// Sorted times at which any control may change value.
  std::vector<double> breakpoints() const;
  /// Rotations with their times, in order.
  std::vector<std::pair<double, Rotation>> rotations() const;
  /// Rotations whose time lies in [t0, t1).
  std::vector<Rotation> rotations_in(double t0, double t1) const;

  nlohmann::json to_json() const;
  static PulseSchedule from_json(const nlohmann::json& j);

  bool operator==(const PulseSchedule& other) const;

 private:
  double frame_ratio_;
  std::vector<ScheduleEvent> events_;
  std::vector<OutputBin> bins_;
};

/// Options for the standard gate schedules. Rates in rad/ns, times in ns.
struct ScheduleOptions {
  double dt = 1.0;
  double bandwidth = 0.0;       // photon bandwidth Gamma
  double source_kappa = 0.0;    // converter decay used to shape the source pulses
  double gate_kappa = 0.0;      // converter decay used to shape the gate pulses
  double truncation = kDefaultTruncation;  // t_cut = truncation / bandwidth
  double delay = 0.0;           // gate absorption offset relative to the optimum
  double slot = 36.0;           // gate slot length
  double frame_ratio = 1.0;     // drive-to-photon phase ratio r
  double cphase_rate = 0.0;     // g
  double cphase_detuning = 0.0;
  double p2_offset = -1.0;      // start of P2 bin relative to P1 bin; < 0 means one bin

  /// Photon bandwidth 1.8 MHz, shaping rates 2.1 / 2.8 MHz, g = 1.6 MHz.
  static ScheduleOptions defaults();
  double t_cut() const { return truncation / bandwidth; }
  void validate() const;
};

/// Single-qubit gates: source emission, gate absorption, 36 ns slot, gate
/// re-emission into bin "P1". CPHASE: P1 absorbed, P2 reflected in bin "P2"
/// under the drive, P1 re-emitted into bin "P1".
PulseSchedule build_schedule(core::GateLabel gate, const ScheduleOptions& options);

/// Start time of the gate slot in a single-qubit schedule.
double gate_slot_start(const PulseSchedule& schedule);

/// Rotations on the source qubit that prepare a cardinal state from |g>.
/// Labels: "0", "1", "+", "-", "+i", "-i".
std::vector<Rotation> cardinal_preparation(std::string_view label, Chip chip = Chip::Source);
const std::vector<std::string>& cardinal_labels();

/// exp(-i angle sigma / 2) as a 2x2 matrix on {g, e}.
Matrix rotation_matrix(Axis axis, double angle);

}  // namespace photongate::pulse

#endif  // PHOTONGATE_PULSE_SCHEDULE_HPP
