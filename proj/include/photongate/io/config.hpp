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

#ifndef PHOTONGATE_IO_CONFIG_HPP
#define PHOTONGATE_IO_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "photongate/experiments/scenarios.hpp"

namespace photongate::io {

/// Invalid configuration. `key()` is the offending path such as "gate.alpha_mhz".
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& message)
      : Error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct RunConfig {
  experiments::ExperimentSpec spec;
  std::string out_dir = "out";
  std::vector<std::string> formats{"json", "csv"};
};

/// INI text with sections [source], [gate], [link], [run]. `overrides` are
/// "section.key=value" strings applied on top of the text. Unset keys keep the
/// measured device defaults. Throws ConfigError.
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// Every key with its effective value; parse_config(to_ini(c)) reproduces c.
std::string to_ini(const RunConfig& config);
nlohmann::json to_json(const RunConfig& config);

/// All accepted key paths, in emission order.
std::vector<std::string> config_keys();

}  // namespace photongate::io

#endif  // PHOTONGATE_IO_CONFIG_HPP
