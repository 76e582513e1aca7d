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

#include "photongate/io/runner.hpp"

#include <iomanip>

#include "photongate/experiments/registry.hpp"
#include "photongate/io/report.hpp"

namespace photongate::io {

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const experiments::ExperimentReport report = experiments::run_scenario(config.spec);
        for (const auto& path : write_report(report, config)) out << path.string() << "\n";
        if (!report.summary.empty()) out << report.summary.dump() << "\n";
        return int{kExitSuccess};
      },
      err);
}

int list(std::ostream& out) {
  for (const auto& e : experiments::list_experiments()) {
    out << std::left << std::setw(12) << e.name << e.description << "\n";
  }
  return kExitSuccess;
}

}  // namespace photongate::io
