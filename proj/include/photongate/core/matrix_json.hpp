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

#ifndef PHOTONGATE_CORE_MATRIX_JSON_HPP
#define PHOTONGATE_CORE_MATRIX_JSON_HPP

#include <vector>

#include <json.hpp>

#include "photongate/core/process.hpp"
#include "photongate/core/state.hpp"

namespace photongate::core {

// JSON layout: {"dims": [...], "real": [[...]], "imag": [[...]]}, row major.
// dims lists subsystem dimensions whose product is the row count.

nlohmann::json matrix_to_json(const Matrix& m, const std::vector<int>& dims);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, std::vector<int>* dims = nullptr);

nlohmann::json to_json(const QuantumState& state);
QuantumState state_from_json(const nlohmann::json& j);

/// Process maps use dims = [4, 4, ...], one entry per qubit.
nlohmann::json to_json(const ProcessMap& process);
ProcessMap process_from_json(const nlohmann::json& j);

}  // namespace photongate::core

#endif  // PHOTONGATE_CORE_MATRIX_JSON_HPP
