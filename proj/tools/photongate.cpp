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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "photongate/io/config.hpp"
#include "photongate/io/runner.hpp"

namespace io = photongate::io;

namespace {

io::RunConfig build_config(const std::string& path, std::vector<std::string> sets) {
  if (path.empty()) return io::parse_config("", sets);
  return io::load_config(path, sets);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photongate: two-chip photonic qubit gate simulator"};
  app.require_subcommand(1);

  std::string experiment;
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::vector<std::string> sets;

  CLI::App* run = app.add_subcommand("run", "run one experiment and write its report");
  run->add_option("experiment", experiment, "registered experiment name")->required();
  run->add_option("--config", config_path, "INI file with [source] [gate] [link] [run]");
  run->add_option("--out", out_dir, "output directory");
  CLI::Option* seed_opt = run->add_option("--seed", seed, "noise seed");
  run->add_option("--set", sets, "override, e.g. gate.alpha_mhz=300")->expected(1, -1);

  CLI::App* list = app.add_subcommand("list", "list registered experiments");

  std::string validate_path;
  std::vector<std::string> validate_sets;
  CLI::App* validate = app.add_subcommand("validate", "check a config file and print it resolved");
  validate->add_option("config", validate_path, "INI file")->required();
  validate->add_option("--set", validate_sets, "override, e.g. link.eta=0.9")->expected(1, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : io::kExitConfigError;
  }

  if (*list) return io::list(std::cout);
  if (*validate) {
    return io::guarded(
        [&] {
          std::cout << io::to_ini(io::load_config(validate_path, validate_sets));
          return int{io::kExitSuccess};
        },
        std::cerr);
  }
  io::RunConfig config;
  const int status = io::guarded(
      [&] {
        std::vector<std::string> all = sets;
        all.push_back("run.experiment=" + experiment);
        if (!out_dir.empty()) all.push_back("run.out=" + out_dir);
        if (*seed_opt) all.push_back("run.seed=" + std::to_string(seed));
        config = build_config(config_path, all);
        return int{io::kExitSuccess};
      },
      std::cerr);
  if (status != io::kExitSuccess) return status;
  return io::run(config, std::cout, std::cerr);
}
