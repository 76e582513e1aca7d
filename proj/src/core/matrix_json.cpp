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

#include "photongate/core/matrix_json.hpp"

#include <functional>
#include <numeric>

namespace photongate::core {

nlohmann::json matrix_to_json(const Matrix& m, const std::vector<int>& dims) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row_re = nlohmann::json::array();
    nlohmann::json row_im = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row_re.push_back(m(i, j).real());
      row_im.push_back(m(i, j).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return nlohmann::json{{"dims", dims}, {"real", std::move(re)}, {"imag", std::move(im)}};
}

nlohmann::json matrix_to_json(const Matrix& m) {
  return matrix_to_json(m, {static_cast<int>(m.rows())});
}

Matrix matrix_from_json(const nlohmann::json& j, std::vector<int>* dims) {
  try {
    const auto& re = j.at("real");
    const auto& im = j.at("imag");
    const auto rows = static_cast<Eigen::Index>(re.size());
    if (static_cast<Eigen::Index>(im.size()) != rows || rows == 0) {
      throw DimensionError("matrix json: real/imag row counts differ or are empty");
    }
    const auto cols = static_cast<Eigen::Index>(re.at(0).size());
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (static_cast<Eigen::Index>(re.at(i).size()) != cols ||
          static_cast<Eigen::Index>(im.at(i).size()) != cols) {
        throw DimensionError("matrix json: ragged rows");
      }
      for (Eigen::Index j2 = 0; j2 < cols; ++j2) {
        m(i, j2) = Complex(re.at(i).at(j2).get<double>(), im.at(i).at(j2).get<double>());
      }
    }
    auto d = j.at("dims").get<std::vector<int>>();
    const int prod = std::accumulate(d.begin(), d.end(), 1, std::multiplies<>());
    if (prod != rows) throw DimensionError("matrix json: dims do not match row count");
    if (dims) *dims = std::move(d);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DimensionError(std::string("matrix json: ") + e.what());
  }
}

nlohmann::json to_json(const QuantumState& state) {
  return matrix_to_json(state.matrix(), state.dims());
}

QuantumState state_from_json(const nlohmann::json& j) {
  std::vector<int> dims;
  Matrix m = matrix_from_json(j, &dims);
  return QuantumState(std::move(m), std::move(dims));
}

nlohmann::json to_json(const ProcessMap& process) {
  return matrix_to_json(process.chi(), std::vector<int>(process.n_qubits(), 4));
}

ProcessMap process_from_json(const nlohmann::json& j) {
  std::vector<int> dims;
  Matrix m = matrix_from_json(j, &dims);
  return ProcessMap(std::move(m), static_cast<int>(dims.size()));
}

}  // namespace photongate::core
