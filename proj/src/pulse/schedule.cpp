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

#include "photongate/pulse/schedule.hpp"

#include <algorithm>
#include <cmath>

namespace photongate::pulse {

namespace {

constexpr double kTimeEps = 1e-9;

Chip parse_chip(std::string_view s) {
  if (s == "source") return Chip::Source;
  if (s == "gate") return Chip::Gate;
  throw DomainError("unknown chip '" + std::string(s) + "'");
}

Axis parse_axis(std::string_view s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  throw DomainError("unknown rotation axis '" + std::string(s) + "'");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view to_string(Chip c) { return c == Chip::Source ? "source" : "gate"; }
std::string_view to_string(Axis a) { return a == Axis::X ? "x" : "y"; }

std::string ScheduleEvent::channel() const {
  return std::visit(
      Overloaded{
          [](const CouplingSegment& s) { return std::string(to_string(s.chip)) + ".coupler"; },
          [](const CphaseSegment&) { return std::string("gate.cphase"); },
          [](const Rotation& r) { return std::string(to_string(r.chip)) + ".qubit"; },
          [](const Idle& i) { return std::string(to_string(i.chip)) + ".qubit"; },
          [](const FramePhase& f) { return std::string(to_string(f.chip)) + ".coupler"; },
      },
      payload);
}

std::string_view ScheduleEvent::kind() const {
  switch (payload.index()) {
    case 0: return "coupling";
    case 1: return "cphase_drive";
    case 2: return "rotation";
    case 3: return "idle";
    default: return "frame_phase";
  }
}

double ScheduleEvent::duration() const {
  return std::visit(Overloaded{
                        [](const CouplingSegment& s) { return s.waveform.grid.duration(); },
                        [](const CphaseSegment& c) { return c.duration; },
                        [](const Rotation&) { return 0.0; },
                        [](const Idle& i) { return i.duration; },
                        [](const FramePhase&) { return 0.0; },
                    },
                    payload);
}

PulseSchedule::PulseSchedule(double frame_ratio) : frame_ratio_(frame_ratio) {
  if (!std::isfinite(frame_ratio) || frame_ratio == 0.0) {
    throw DomainError("schedule: frame ratio must be finite and nonzero");
  }
}

void PulseSchedule::add(ScheduleEvent event) {
  if (auto* seg = std::get_if<CouplingSegment>(&event.payload)) {
    seg->waveform.grid.t0 = event.t_start;
  }
  if (!std::isfinite(event.t_start) || !std::isfinite(event.duration()) || event.duration() < 0.0) {
    throw DomainError("schedule: event times must be finite and durations non-negative");
  }
  if (event.duration() > 0.0) {
    const std::string ch = event.channel();
    for (const auto& other : events_) {
      if (other.duration() <= 0.0 || other.channel() != ch) continue;
      if (event.t_start < other.t_stop() - kTimeEps && other.t_start < event.t_stop() - kTimeEps) {
        throw DomainError("schedule: overlapping " + std::string(event.kind()) + " on channel " +
                          ch + " at t=" + std::to_string(event.t_start));
      }
    }
  }
  auto pos = std::upper_bound(events_.begin(), events_.end(), event.t_start,
                              [](double t, const ScheduleEvent& e) { return t < e.t_start; });
  events_.insert(pos, std::move(event));
}

void PulseSchedule::add_bin(OutputBin bin) {
  if (!(bin.t_stop > bin.t_start)) throw DomainError("schedule: empty output bin");
  bins_.push_back(std::move(bin));
}

const OutputBin& PulseSchedule::bin(std::string_view label) const {
  for (const auto& b : bins_) {
    if (b.label == label) return b;
  }
  throw DomainError("schedule: no output bin '" + std::string(label) + "'");
}

double PulseSchedule::duration() const {
  double end = 0.0;
  for (const auto& e : events_) end = std::max(end, e.t_stop());
  for (const auto& b : bins_) end = std::max(end, b.t_stop);
  return end;
}

double PulseSchedule::frame_phase_at(Chip chip, double t) const {
  double phase = 0.0;
  for (const auto& e : events_) {
    if (e.t_start > t + kTimeEps) break;
    if (const auto* f = std::get_if<FramePhase>(&e.payload); f && f->chip == chip) {
      phase += f->phase;
    }
  }
  return phase;
}

Complex PulseSchedule::coupling_at(Chip chip, double t) const {
  for (const auto& e : events_) {
    const auto* seg = std::get_if<CouplingSegment>(&e.payload);
    if (!seg || seg->chip != chip) continue;
    const double j = seg->waveform.value_at(t);
    if (j != 0.0) return std::polar(j, frame_ratio_ * frame_phase_at(chip, t));
  }
  return {};
}

const CphaseSegment* PulseSchedule::cphase_at(double t) const {
  for (const auto& e : events_) {
    const auto* c = std::get_if<CphaseSegment>(&e.payload);
    if (c && t >= e.t_start && t < e.t_stop()) return c;
  }
  return nullptr;
}

std::vector<double> PulseSchedule::breakpoints() const {
  std::vector<double> t{0.0};
  for (const auto& e : events_) {
    t.push_back(e.t_start);
    t.push_back(e.t_stop());
    if (const auto* seg = std::get_if<CouplingSegment>(&e.payload)) {
      for (int k = 1; k < seg->waveform.grid.size; ++k) {
        t.push_back(seg->waveform.grid.t0 + k * seg->waveform.grid.dt);
      }
    }
  }
  for (const auto& b : bins_) {
    t.push_back(b.t_start);
    t.push_back(b.t_stop);
  }
  std::sort(t.begin(), t.end());
  std::vector<double> out;
  for (double x : t) {
    if (out.empty() || x - out.back() > kTimeEps) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<double, Rotation>> PulseSchedule::rotations() const {
  std::vector<std::pair<double, Rotation>> out;
  for (const auto& e : events_) {
    if (const auto* r = std::get_if<Rotation>(&e.payload)) out.emplace_back(e.t_start, *r);
  }
  return out;
}

std::vector<Rotation> PulseSchedule::rotations_in(double t0, double t1) const {
  std::vector<Rotation> out;
  for (const auto& [t, r] : rotations()) {
    if (t >= t0 - kTimeEps && t < t1 - kTimeEps) out.push_back(r);
  }
  return out;
}

nlohmann::json PulseSchedule::to_json() const {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : events_) {
    nlohmann::json params = std::visit(
        Overloaded{
            [](const CouplingSegment& s) {
              return nlohmann::json{{"direction", to_string(s.waveform.direction)},
                                    {"dt", s.waveform.grid.dt},
                                    {"samples", s.waveform.samples}};
            },
            [](const CphaseSegment& c) {
              return nlohmann::json{
                  {"rate", c.rate}, {"duration", c.duration}, {"detuning", c.detuning}};
            },
            [](const Rotation& r) {
              return nlohmann::json{{"axis", to_string(r.axis)}, {"angle", r.angle}};
            },
            [](const Idle& i) { return nlohmann::json{{"duration", i.duration}}; },
            [](const FramePhase& f) { return nlohmann::json{{"phase", f.phase}}; },
        },
        e.payload);
    events.push_back({{"t_start", e.t_start},
                      {"channel", e.channel()},
                      {"kind", e.kind()},
                      {"params", std::move(params)}});
  }
  nlohmann::json bins = nlohmann::json::array();
  for (const auto& b : bins_) {
    bins.push_back({{"label", b.label}, {"t_start", b.t_start}, {"t_stop", b.t_stop}});
  }
  return {{"frame_ratio", frame_ratio_}, {"events", std::move(events)}, {"bins", std::move(bins)}};
}

PulseSchedule PulseSchedule::from_json(const nlohmann::json& j) {
  try {
    PulseSchedule s(j.at("frame_ratio").get<double>());
    for (const auto& ej : j.at("events")) {
      const auto channel = ej.at("channel").get<std::string>();
      const auto kind = ej.at("kind").get<std::string>();
      const auto& p = ej.at("params");
      const auto dot = channel.find('.');
      if (dot == std::string::npos) throw DomainError("schedule json: bad channel " + channel);
      const Chip chip = parse_chip(std::string_view(channel).substr(0, dot));
      ScheduleEvent ev;
      ev.t_start = ej.at("t_start").get<double>();
      if (kind == "coupling") {
        CouplingSegment seg;
        seg.chip = chip;
        seg.waveform.direction = parse_direction(p.at("direction").get<std::string>());
        seg.waveform.samples = p.at("samples").get<std::vector<double>>();
        seg.waveform.grid = TimeGrid{ev.t_start, p.at("dt").get<double>(),
                                     static_cast<int>(seg.waveform.samples.size())};
        ev.payload = std::move(seg);
      } else if (kind == "cphase_drive") {
        ev.payload = CphaseSegment{p.at("rate").get<double>(), p.at("duration").get<double>(),
                                   p.at("detuning").get<double>()};
      } else if (kind == "rotation") {
        ev.payload = Rotation{chip, parse_axis(p.at("axis").get<std::string>()),
                              p.at("angle").get<double>()};
      } else if (kind == "idle") {
        ev.payload = Idle{chip, p.at("duration").get<double>()};
      } else if (kind == "frame_phase") {
        ev.payload = FramePhase{chip, p.at("phase").get<double>()};
      } else {
        throw DomainError("schedule json: unknown event kind '" + kind + "'");
      }
      if (ev.channel() != channel) {
        throw DomainError("schedule json: kind " + kind + " cannot use channel " + channel);
      }
      s.add(std::move(ev));
    }
    for (const auto& bj : j.value("bins", nlohmann::json::array())) {
      s.add_bin({bj.at("label").get<std::string>(), bj.at("t_start").get<double>(),
                 bj.at("t_stop").get<double>()});
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("schedule json: ") + e.what());
  }
}

bool PulseSchedule::operator==(const PulseSchedule& other) const {
  return to_json() == other.to_json();
}

ScheduleOptions ScheduleOptions::defaults() {
  ScheduleOptions o;
  o.bandwidth = mhz_to_rad_per_ns(1.8);
  o.source_kappa = mhz_to_rad_per_ns(2.1);
  o.gate_kappa = mhz_to_rad_per_ns(2.8);
  o.cphase_rate = mhz_to_rad_per_ns(1.6);
  return o;
}

void ScheduleOptions::validate() const {
  if (!(dt > 0.0)) throw DomainError("schedule options: dt must be positive");
  if (!(bandwidth > 0.0)) throw DomainError("schedule options: bandwidth must be positive");
  if (bandwidth > source_kappa * (1.0 + 1e-12) || bandwidth > gate_kappa * (1.0 + 1e-12)) {
    throw DomainError("schedule options: bandwidth exceeds a shaping decay rate");
  }
  if (truncation < 1.0) throw DomainError("schedule options: truncation below 1 / bandwidth");
  if (slot < 0.0) throw DomainError("schedule options: negative gate slot");
  if (cphase_rate < 0.0) throw DomainError("schedule options: negative CPHASE rate");
}

PulseSchedule build_schedule(core::GateLabel gate, const ScheduleOptions& o) {
  o.validate();
  const double t_cut = o.t_cut();
  const CouplingWaveform src_emit = emission_coupling(o.bandwidth, o.source_kappa, o.dt, t_cut);
  const CouplingWaveform gate_emit = emission_coupling(o.bandwidth, o.gate_kappa, o.dt, t_cut);
  const CouplingWaveform gate_absorb = absorption_coupling(gate_emit);
  const double bin = src_emit.grid.duration();

  PulseSchedule s(o.frame_ratio);
  const double t_src = std::max(0.0, -o.delay);
  const double t_abs = t_src + o.delay;
  s.add({t_src, CouplingSegment{Chip::Source, src_emit}});
  s.add({t_abs, CouplingSegment{Chip::Gate, gate_absorb}});

  if (gate == core::GateLabel::CPHASE) {
    const double offset = o.p2_offset < 0.0 ? bin : o.p2_offset;
    if (offset < bin - kTimeEps) throw DomainError("schedule: P2 would overlap P1 emission");
    const double t_p2 = t_src + offset;
    s.add({t_p2, CouplingSegment{Chip::Source, src_emit}});
    const double drive_start = t_abs + bin;
    const double drive_stop = t_p2 + bin + std::max(0.0, o.delay);
    s.add({drive_start, CphaseSegment{o.cphase_rate, drive_stop - drive_start, o.cphase_detuning}});
    s.add_bin({"P2", t_p2, t_p2 + bin});
    s.add({drive_stop, CouplingSegment{Chip::Gate, gate_emit}});
    s.add_bin({"P1", drive_stop, drive_stop + bin});
    return s;
  }

  const double slot_start = t_abs + bin;
  s.add({slot_start, Idle{Chip::Gate, o.slot}});
  switch (gate) {
    case core::GateLabel::X: s.add({slot_start, Rotation{Chip::Gate, Axis::X, kPi}}); break;
    case core::GateLabel::Y: s.add({slot_start, Rotation{Chip::Gate, Axis::Y, kPi}}); break;
    case core::GateLabel::T:
      s.add({slot_start + o.slot, FramePhase{Chip::Gate, 0.25 * kPi / o.frame_ratio}});
      break;
    default: break;
  }
  const double t_emit = slot_start + o.slot;
  s.add({t_emit, CouplingSegment{Chip::Gate, gate_emit}});
  s.add_bin({"P1", t_emit, t_emit + bin});
  return s;
}

double gate_slot_start(const PulseSchedule& schedule) {
  for (const auto& e : schedule.events()) {
    if (std::holds_alternative<Idle>(e.payload)) return e.t_start;
  }
  throw DomainError("schedule has no gate slot");
}

const std::vector<std::string>& cardinal_labels() {
  static const std::vector<std::string> labels{"0", "1", "+", "-", "+i", "-i"};
  return labels;
}

std::vector<Rotation> cardinal_preparation(std::string_view label, Chip chip) {
  if (label == "0") return {};
  if (label == "1") return {Rotation{chip, Axis::X, kPi}};
  if (label == "+") return {Rotation{chip, Axis::Y, 0.5 * kPi}};
  if (label == "-") return {Rotation{chip, Axis::Y, -0.5 * kPi}};
  if (label == "+i") return {Rotation{chip, Axis::X, -0.5 * kPi}};
  if (label == "-i") return {Rotation{chip, Axis::X, 0.5 * kPi}};
  throw DomainError("unknown cardinal state '" + std::string(label) + "'");
}

Matrix rotation_matrix(Axis axis, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  Matrix r(2, 2);
  if (axis == Axis::X) {
    r << c, Complex(0, -s), Complex(0, -s), c;
  } else {
    r << c, -s, s, c;
  }
  return r;
}

}  // namespace photongate::pulse
