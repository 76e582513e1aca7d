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

#include "photongate/io/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "photongate/experiments/registry.hpp"

namespace photongate::io {

namespace {

namespace pt = boost::property_tree;

enum class Rule { Any, Positive, NonNegative, UnitInterval };

struct NumberField {
  std::string path;
  Rule rule;
  std::function<double&(RunConfig&)> ref;
};

dynamics::DeviceParams& device(RunConfig& c, bool source) {
  return source ? c.spec.model.source : c.spec.model.gate;
}

std::vector<NumberField> device_fields() {
  std::vector<NumberField> out;
  for (bool source : {true, false}) {
    const std::string s = source ? "source." : "gate.";
    auto add = [&](const char* key, Rule rule, double dynamics::DeviceParams::*m) {
      out.push_back({s + key, rule, [source, m](RunConfig& c) -> double& {
                       return device(c, source).*m;
                     }});
    };
    add("omega_ge_ghz", Rule::Positive, &dynamics::DeviceParams::omega_ge_ghz);
    add("omega_ef_ghz", Rule::Positive, &dynamics::DeviceParams::omega_ef_ghz);
    add("alpha_mhz", Rule::Positive, &dynamics::DeviceParams::alpha_mhz);
    add("t1_e_us", Rule::Positive, &dynamics::DeviceParams::t1_e_us);
    add("t1_f_us", Rule::Positive, &dynamics::DeviceParams::t1_f_us);
    add("t2_e_us", Rule::Positive, &dynamics::DeviceParams::t2_e_us);
    add("t2_f_us", Rule::Positive, &dynamics::DeviceParams::t2_f_us);
    add("omega_c_ghz", Rule::Positive, &dynamics::DeviceParams::omega_c_ghz);
    add("omega_01_ghz", Rule::Positive, &dynamics::DeviceParams::omega_01_ghz);
    add("kappa_mhz", Rule::Positive, &dynamics::DeviceParams::kappa_mhz);
  }
  return out;
}

std::vector<NumberField> plain_fields() {
  std::vector<NumberField> out = device_fields();
  auto sched = [](double pulse::ScheduleOptions::*m) {
    return [m](RunConfig& c) -> double& { return c.spec.schedule.*m; };
  };
  out.push_back({"link.eta", Rule::UnitInterval,
                 [](RunConfig& c) -> double& { return c.spec.model.eta; }});
  out.push_back({"link.truncation", Rule::Positive, sched(&pulse::ScheduleOptions::truncation)});
  out.push_back({"link.dt_ns", Rule::Positive, sched(&pulse::ScheduleOptions::dt)});
  out.push_back({"link.delay_ns", Rule::Any, sched(&pulse::ScheduleOptions::delay)});
  out.push_back({"link.slot_ns", Rule::NonNegative, sched(&pulse::ScheduleOptions::slot)});
  out.push_back({"link.frame_ratio", Rule::Any, sched(&pulse::ScheduleOptions::frame_ratio)});
  out.push_back({"link.p2_offset_ns", Rule::Any, sched(&pulse::ScheduleOptions::p2_offset)});
  return out;
}

// Stored in rad/ns, written in MHz.
std::vector<NumberField> rate_fields() {
  auto sched = [](double pulse::ScheduleOptions::*m) {
    return [m](RunConfig& c) -> double& { return c.spec.schedule.*m; };
  };
  return {
      {"link.bandwidth_mhz", Rule::Positive, sched(&pulse::ScheduleOptions::bandwidth)},
      {"link.converter_detuning_mhz", Rule::Any,
       [](RunConfig& c) -> double& { return c.spec.model.gate_converter_detuning; }},
      {"source.shape_kappa_mhz", Rule::Positive, sched(&pulse::ScheduleOptions::source_kappa)},
      {"gate.shape_kappa_mhz", Rule::Positive, sched(&pulse::ScheduleOptions::gate_kappa)},
      {"gate.cphase_rate_mhz", Rule::NonNegative, sched(&pulse::ScheduleOptions::cphase_rate)},
      {"gate.cphase_detuning_mhz", Rule::Any, sched(&pulse::ScheduleOptions::cphase_detuning)},
  };
}

const std::vector<std::string>& other_keys() {
  static const std::vector<std::string> keys = {
      "link.decoherence", "run.experiment",      "run.out",    "run.seed",
      "run.threads",      "run.sweep_parameter", "run.sweep_values", "run.formats"};
  return keys;
}

double parse_number(const std::string& key, const std::string& text) {
  const std::string t = boost::algorithm::trim_copy(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(key, "expected a number, got '" + text + "'");
  }
  if (!std::isfinite(v)) throw ConfigError(key, "value must be finite");
  return v;
}

void check_rule(const std::string& key, Rule rule, double v) {
  switch (rule) {
    case Rule::Any:
      return;
    case Rule::Positive:
      if (!(v > 0.0)) throw ConfigError(key, "must be positive");
      return;
    case Rule::NonNegative:
      if (v < 0.0) throw ConfigError(key, "must not be negative");
      return;
    case Rule::UnitInterval:
      if (v < 0.0 || v > 1.0) throw ConfigError(key, "must lie in [0, 1]");
      return;
  }
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = boost::algorithm::to_lower_copy(boost::algorithm::trim_copy(text));
  if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
  if (t == "false" || t == "no" || t == "off" || t == "0") return false;
  throw ConfigError(key, "expected true or false, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  const std::string t = boost::algorithm::trim_copy(text);
  if (t.empty()) return parts;
  boost::algorithm::split(parts, t, boost::is_any_of(","));
  for (auto& p : parts) boost::algorithm::trim(p);
  return parts;
}

template <typename Int>
Int parse_integer(const std::string& key, const std::string& text) {
  const std::string t = boost::algorithm::trim_copy(text);
  Int v{};
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(key, "expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

void assign(RunConfig& c, const std::string& key, const std::string& value) {
  for (const auto& f : plain_fields()) {
    if (f.path != key) continue;
    const double v = parse_number(key, value);
    check_rule(key, f.rule, v);
    f.ref(c) = v;
    return;
  }
  for (const auto& f : rate_fields()) {
    if (f.path != key) continue;
    const double v = parse_number(key, value);
    check_rule(key, f.rule, v);
    f.ref(c) = mhz_to_rad_per_ns(v);
    return;
  }
  if (key == "link.decoherence") {
    c.spec.model.decoherence = parse_bool(key, value);
  } else if (key == "run.experiment") {
    c.spec.name = boost::algorithm::trim_copy(value);
  } else if (key == "run.out") {
    c.out_dir = boost::algorithm::trim_copy(value);
    if (c.out_dir.empty()) throw ConfigError(key, "output directory must not be empty");
  } else if (key == "run.seed") {
    c.spec.seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "run.threads") {
    c.spec.threads = parse_integer<int>(key, value);
    if (c.spec.threads < 1) throw ConfigError(key, "must be at least 1");
  } else if (key == "run.sweep_parameter") {
    c.spec.sweep_parameter = boost::algorithm::trim_copy(value);
  } else if (key == "run.sweep_values") {
    c.spec.sweep_values.clear();
    for (const auto& p : split_list(value)) c.spec.sweep_values.push_back(parse_number(key, p));
  } else if (key == "run.formats") {
    c.formats = split_list(value);
    for (const auto& f : c.formats) {
      if (f != "json" && f != "csv") throw ConfigError(key, "unknown format '" + f + "'");
    }
    if (c.formats.empty()) throw ConfigError(key, "at least one format is required");
  } else {
    throw ConfigError(key, "unknown key");
  }
}

void validate(const RunConfig& c) {
  if (c.spec.name.empty()) throw ConfigError("run.experiment", "missing experiment name");
  if (!experiments::is_registered(c.spec.name)) {
    throw ConfigError("run.experiment", "unknown experiment '" + c.spec.name + "'");
  }
  for (bool source : {true, false}) {
    const auto& d = source ? c.spec.model.source : c.spec.model.gate;
    const std::string s = source ? "source." : "gate.";
    if (d.t2_e_us > 2.0 * d.t1_e_us) throw ConfigError(s + "t2_e_us", "exceeds 2 t1_e_us");
    if (d.t2_f_us > 2.0 * d.t1_f_us) throw ConfigError(s + "t2_f_us", "exceeds 2 t1_f_us");
  }
  const auto& so = c.spec.schedule;
  if (so.bandwidth > so.source_kappa * (1.0 + 1e-12) ||
      so.bandwidth > so.gate_kappa * (1.0 + 1e-12)) {
    throw ConfigError("link.bandwidth_mhz", "exceeds a shape_kappa_mhz");
  }
  if (so.truncation < 1.0) throw ConfigError("link.truncation", "must be at least 1");
  try {
    c.spec.validate();
  } catch (const DomainError& e) {
    throw ConfigError("run", e.what());
  }
}

// Shortest text that parses back to the same double.
std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string join(const std::vector<std::string>& parts) {
  return boost::algorithm::join(parts, ",");
}

}  // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& f : plain_fields()) keys.push_back(f.path);
  for (const auto& f : rate_fields()) keys.push_back(f.path);
  for (const auto& k : other_keys()) keys.push_back(k);
  return keys;
}

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("line " + std::to_string(e.line()), e.message());
  }
  static const std::set<std::string> sections = {"source", "gate", "link", "run"};
  RunConfig c;
  for (const auto& [section, body] : tree) {
    if (!sections.count(section)) throw ConfigError(section, "unknown section");
    if (body.empty() && !body.data().empty()) {
      throw ConfigError(section, "key outside of a section");
    }
    for (const auto& [key, value] : body) assign(c, section + "." + key, value.data());
  }
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError(o, "override must be written key=value");
    const std::string key = boost::algorithm::trim_copy(o.substr(0, eq));
    if (key.find('.') == std::string::npos) {
      throw ConfigError(key, "override key must be written section.key");
    }
    assign(c, key, o.substr(eq + 1));
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), overrides);
}

std::string to_ini(const RunConfig& config) {
  RunConfig c = config;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections;
  auto put = [&](const std::string& path, std::string value) {
    const auto dot = path.find('.');
    sections[path.substr(0, dot)].emplace_back(path.substr(dot + 1), std::move(value));
  };
  for (const auto& f : plain_fields()) put(f.path, format_number(f.ref(c)));
  for (const auto& f : rate_fields()) put(f.path, format_number(rad_per_ns_to_mhz(f.ref(c))));
  put("link.decoherence", c.spec.model.decoherence ? "true" : "false");
  put("run.experiment", c.spec.name);
  put("run.out", c.out_dir);
  put("run.seed", std::to_string(c.spec.seed));
  put("run.threads", std::to_string(c.spec.threads));
  put("run.sweep_parameter", c.spec.sweep_parameter);
  std::vector<std::string> values;
  for (double v : c.spec.sweep_values) values.push_back(format_number(v));
  put("run.sweep_values", join(values));
  put("run.formats", join(c.formats));

  std::ostringstream os;
  bool first = true;
  for (const char* name : {"source", "gate", "link", "run"}) {
    if (!first) os << "\n";
    first = false;
    os << "[" << name << "]\n";
    for (const auto& [k, v] : sections[name]) os << k << " = " << v << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const RunConfig& config) {
  RunConfig c = config;
  nlohmann::json j = nlohmann::json::object();
  auto put = [&](const std::string& path, nlohmann::json v) {
    const auto dot = path.find('.');
    j[path.substr(0, dot)][path.substr(dot + 1)] = std::move(v);
  };
  for (const auto& f : plain_fields()) put(f.path, f.ref(c));
  for (const auto& f : rate_fields()) put(f.path, rad_per_ns_to_mhz(f.ref(c)));
  put("link.decoherence", c.spec.model.decoherence);
  put("run.experiment", c.spec.name);
  put("run.out", c.out_dir);
  put("run.seed", c.spec.seed);
  put("run.threads", c.spec.threads);
  put("run.sweep_parameter", c.spec.sweep_parameter);
  put("run.sweep_values", c.spec.sweep_values);
  put("run.formats", c.formats);
  return j;
}

}  // namespace photongate::io
