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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <doctest.h>

#include "photongate/experiments/registry.hpp"
#include "photongate/io/config.hpp"
#include "photongate/io/report.hpp"
#include "photongate/io/runner.hpp"

using namespace photongate;
using namespace photongate::io;

namespace fs = std::filesystem;

namespace {

std::string config_error_key(std::string_view text, const std::vector<std::string>& overrides = {}) {
  try {
    parse_config(text, overrides);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("photongate_test_io_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("registry") {
  const auto& all = experiments::list_experiments();
  REQUIRE_FALSE(all.empty());
  std::set<std::string> names;
  for (const auto& e : all) {
    CHECK(names.insert(e.name).second);
    CHECK_FALSE(e.description.empty());
  }
  for (const char* n : {"fig2c", "fig3a", "bell", "qpt-i", "qpt-x", "qpt-y", "qpt-t", "qpt-cphase",
                        "fig5", "mollow", "fig6", "fig7a", "fig7b", "fig7c", "fig10"}) {
    CHECK_MESSAGE(experiments::is_registered(n), n);
  }
  CHECK(experiments::experiment_info("fig7a").sweep == "detuning_mhz");
  CHECK_FALSE(experiments::is_registered("fig99"));
  CHECK_THROWS_AS(experiments::experiment_info("fig99"), DomainError);
}

TEST_CASE("experiment spec validation") {
  experiments::ExperimentSpec s;
  s.name = "fig7a";
  CHECK_NOTHROW(s.validate());
  s.sweep_parameter = "delay_ns";
  CHECK_THROWS_AS(s.validate(), DomainError);
  s.name = "fig5";
  s.sweep_parameter.clear();
  s.sweep_values = {1.0, 2.0};
  CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("config defaults") {
  const RunConfig c = parse_config("[run]\nexperiment = fig5\n");
  CHECK(c.spec.name == "fig5");
  CHECK(c.spec.model.gate.alpha_mhz == doctest::Approx(301.7));
  CHECK(c.spec.model.eta == doctest::Approx(0.75));
  CHECK(c.out_dir == "out");
  CHECK(c.formats == std::vector<std::string>{"json", "csv"});
  const auto keys = config_keys();
  CHECK(std::find(keys.begin(), keys.end(), "link.eta") != keys.end());
  CHECK(std::find(keys.begin(), keys.end(), "gate.alpha_mhz") != keys.end());
}

TEST_CASE("config overrides and units") {
  const RunConfig c = parse_config("[run]\nexperiment = fig5\n[link]\neta = 0.5\n",
                                   {"link.eta=1", "link.bandwidth_mhz=1.5"});
  CHECK(c.spec.model.eta == 1.0);
  CHECK(c.spec.schedule.bandwidth == doctest::Approx(mhz_to_rad_per_ns(1.5)).epsilon(1e-14));
  CHECK(parse_config("", {"run.experiment=fig7a", "run.sweep_values=1, 2,3"}).spec.sweep_values ==
        std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("config rejections name the offending key") {
  const std::string base = "[run]\nexperiment = fig5\n";
  CHECK(config_error_key(base + "[link]\neta = 1.5\n") == "link.eta");
  CHECK(config_error_key(base, {"link.eta=-0.1"}) == "link.eta");
  CHECK(config_error_key(base, {"gate.bogus=1"}) == "gate.bogus");
  CHECK(config_error_key(base + "[extra]\nx = 1\n").rfind("extra", 0) == 0);
  CHECK(config_error_key("") == "run.experiment");
  CHECK(config_error_key("[run]\nexperiment = nope\n") == "run.experiment");
  CHECK(config_error_key(base, {"gate.alpha_mhz=abc"}) == "gate.alpha_mhz");
  CHECK(config_error_key(base, {"gate.kappa_mhz=-2"}) == "gate.kappa_mhz");
  CHECK(config_error_key(base, {"gate.t2_e_us=1000"}).rfind("gate.t2_e", 0) == 0);
  CHECK(config_error_key(base, {"link.truncation=0.5"}) == "link.truncation");
  CHECK(config_error_key(base, {"run.threads=zero"}) == "run.threads");
  CHECK(config_error_key(base, {"noequals"}) != "");
  CHECK_THROWS_AS(load_config("/nonexistent/photongate.ini"), ConfigError);
}

TEST_CASE("config round trip") {
  const RunConfig c = parse_config("", {"run.experiment=fig7b", "link.eta=0.6180339887498949",
                                        "gate.alpha_mhz=301.71234567891234",
                                        "link.bandwidth_mhz=1.7", "run.seed=99",
                                        "run.sweep_values=0.1,0.2", "link.decoherence=false"});
  const RunConfig back = parse_config(to_ini(c));
  CHECK(to_json(back) == to_json(c));
  CHECK(back.spec.model.eta == c.spec.model.eta);
  CHECK(std::abs(back.spec.schedule.bandwidth - c.spec.schedule.bandwidth) <= 1e-14);
  CHECK(back.spec.model.gate.alpha_mhz == 301.71234567891234);
  CHECK_FALSE(back.spec.model.decoherence);
  CHECK(to_ini(back) == to_ini(c));
}

TEST_CASE("config file loading") {
  const fs::path dir = scratch_dir("load");
  fs::create_directories(dir);
  const fs::path file = dir / "run.ini";
  std::ofstream(file) << "[run]\nexperiment = fig3a\nseed = 4\n";
  const RunConfig c = load_config(file.string(), {"run.seed=5"});
  CHECK(c.spec.name == "fig3a");
  CHECK(c.spec.seed == 5);
  fs::remove_all(dir);
}

TEST_CASE("reports are deterministic and written to disk") {
  RunConfig c = parse_config("", {"run.experiment=fig5", "run.seed=3"});
  c.out_dir = scratch_dir("report").string();
  const auto a = report_json(experiments::run_scenario(c.spec), c);
  const auto b = report_json(experiments::run_scenario(c.spec), c);
  CHECK(deterministic_payload(a).dump() == deterministic_payload(b).dump());
  CHECK(a["experiment"] == "fig5");
  CHECK(a["config"]["ini"].get<std::string>() == to_ini(c));

  const auto paths = write_report(experiments::run_scenario(c.spec), c);
  REQUIRE_FALSE(paths.empty());
  for (const auto& p : paths) {
    CHECK(fs::exists(p));
    CHECK(p.filename().string().rfind("fig5", 0) == 0);
  }
  std::ifstream json_file(fs::path(c.out_dir) / "fig5.json");
  const auto parsed = nlohmann::json::parse(json_file);
  CHECK(deterministic_payload(parsed).dump() == deterministic_payload(a).dump());
  for (const auto& t : parsed["tables"]) {
    std::ifstream csv(fs::path(c.out_dir) / t["file"].get<std::string>());
    std::string header;
    std::getline(csv, header);
    CHECK(header.find(t["columns"][0].get<std::string>()) == 0);
  }

  c.formats = {"json"};
  fs::remove_all(c.out_dir);
  CHECK(write_report(experiments::run_scenario(c.spec), c).size() == 1);
  fs::remove_all(c.out_dir);
}

TEST_CASE("runner exit codes") {
  std::ostringstream err;
  CHECK(guarded([] { return 0; }, err) == kExitSuccess);
  CHECK(guarded([]() -> int { throw ConfigError("link.eta", "bad"); }, err) == kExitConfigError);
  CHECK(guarded([]() -> int { throw DomainError("bad"); }, err) == kExitConfigError);
  CHECK(guarded([]() -> int { throw NumericalError("diverged"); }, err) == kExitNumericalError);
  CHECK(guarded([]() -> int { throw std::runtime_error("other"); }, err) == kExitFailure);
  CHECK(err.str().find("link.eta") != std::string::npos);

  std::ostringstream out;
  CHECK(list(out) == kExitSuccess);
  for (const auto& e : experiments::list_experiments()) {
    CHECK(out.str().find(e.name) != std::string::npos);
  }

  RunConfig c = parse_config("", {"run.experiment=fig5"});
  c.out_dir = scratch_dir("runner").string();
  std::ostringstream run_out;
  CHECK(run(c, run_out, err) == kExitSuccess);
  CHECK(fs::exists(fs::path(c.out_dir) / "fig5.json"));
  fs::remove_all(c.out_dir);
}
