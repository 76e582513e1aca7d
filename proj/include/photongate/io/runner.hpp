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

#ifndef PHOTONGATE_IO_RUNNER_HPP
#define PHOTONGATE_IO_RUNNER_HPP

#include <functional>
#include <ostream>

#include "photongate/io/config.hpp"

namespace photongate::io {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitFailure = 1,
  kExitConfigError = 2,
  kExitNumericalError = 3,
};

/// Runs `body` and maps exceptions to exit codes, printing the message to `err`.
int guarded(const std::function<int()>& body, std::ostream& err);

/// Runs the configured experiment and writes its report files.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Prints the registered experiments, one per line.
int list(std::ostream& out);

}  // namespace photongate::io

#endif  // PHOTONGATE_IO_RUNNER_HPP
