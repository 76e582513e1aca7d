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

#include "photongate/io/report.hpp"

#include <algorithm>
#include <fstream>

namespace photongate::io {

namespace {

std::string table_file(const std::string& experiment, const std::string& table) {
  if (table == experiment || table.rfind(experiment + "_", 0) == 0) return table + ".csv";
  return experiment + "_" + table + ".csv";
}

void open_or_throw(std::ofstream& os, const std::filesystem::path& path) {
  os.open(path, std::ios::binary);
  if (!os) throw Error("cannot write " + path.string());
}

}  // namespace

nlohmann::json report_json(const experiments::ExperimentReport& report, const RunConfig& config) {
  nlohmann::json tables = nlohmann::json::object();
  for (const auto& [name, table] : report.tables) {
    tables[name] = {{"file", table_file(report.name, name)},
                    {"columns", table.columns},
                    {"rows", table.rows.size()}};
  }
  return {{"experiment", report.name},
          {"metadata", report.metadata},
          {"config", {{"ini", to_ini(config)}, {"values", to_json(config)}}},
          {"summary", report.summary},
          {"points", report.points},
          {"tables", std::move(tables)}};
}

nlohmann::json deterministic_payload(nlohmann::json report) {
  if (report.contains("metadata")) report["metadata"].erase("runtime_s");
  return report;
}

std::vector<std::filesystem::path> write_report(const experiments::ExperimentReport& report,
                                                const RunConfig& config) {
  const std::filesystem::path dir(config.out_dir);
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto wants = [&](const char* f) {
    return std::find(config.formats.begin(), config.formats.end(), f) != config.formats.end();
  };
  if (wants("json")) {
    const auto path = dir / (report.name + ".json");
    std::ofstream os;
    open_or_throw(os, path);
    os << report_json(report, config).dump(2) << "\n";
    written.push_back(path);
  }
  if (wants("csv")) {
    for (const auto& [name, table] : report.tables) {
      const auto path = dir / table_file(report.name, name);
      std::ofstream os;
      open_or_throw(os, path);
      table.write_csv(os);
      written.push_back(path);
    }
  }
  return written;
}

}  // namespace photongate::io
