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

#ifndef PHOTONGATE_EXPERIMENTS_REGISTRY_HPP
#define PHOTONGATE_EXPERIMENTS_REGISTRY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace photongate::experiments {

struct ExperimentInfo {
  std::string name;
  std::string description;
  std::string sweep;  // default sweep axis, empty if none
};

/// Every scenario accepted by run_scenario, in a fixed order.
const std::vector<ExperimentInfo>& list_experiments();

bool is_registered(std::string_view name);

/// Throws DomainError for unknown names.
const ExperimentInfo& experiment_info(std::string_view name);

}  // namespace photongate::experiments

#endif  // PHOTONGATE_EXPERIMENTS_REGISTRY_HPP
