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

#ifndef PHOTONGATE_IO_REPORT_HPP
#define PHOTONGATE_IO_REPORT_HPP

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "photongate/experiments/scenarios.hpp"
#include "photongate/io/config.hpp"

namespace photongate::io {

/// Report document: experiment, metadata, effective config (INI and JSON),
/// summary, points and the names of the CSV tables.
nlohmann::json report_json(const experiments::ExperimentReport& report, const RunConfig& config);

/// The report without wall-clock fields, for reproducibility checks.
nlohmann::json deterministic_payload(nlohmann::json report);

/// Writes <out>/<name>.json and one <out>/<name>_<table>.csv per table, as
/// selected by config.formats. Returns the written paths.
std::vector<std::filesystem::path> write_report(const experiments::ExperimentReport& report,
                                                const RunConfig& config);

}  // namespace photongate::io

#endif  // PHOTONGATE_IO_REPORT_HPP
