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

#include "photongate/tomography/process_tomography.hpp"

#include <cmath>

#include <Eigen/QR>

#include "photongate/core/matrix_json.hpp"

namespace photongate::tomography {

Matrix cardinal_state(std::string_view label) {
  const double s = 1.0 / std::sqrt(2.0);
  Vector psi(2);
  if (label == "0") {
    psi << 1.0, 0.0;
  } else if (label == "1") {
    psi << 0.0, 1.0;
  } else if (label == "+") {
    psi << s, s;
  } else if (label == "-") {
    psi << s, -s;
  } else if (label == "+i") {
    psi << s, Complex(0.0, s);
  } else if (label == "-i") {
    psi << s, Complex(0.0, -s);
  } else {
    throw DomainError("unknown cardinal state '" + std::string(label) + "'");
  }
  return psi * psi.adjoint();
}

Matrix input_state(std::string_view label) {
  Matrix rho = Matrix::Identity(1, 1);
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = label.find(',', start);
    rho = core::tensor(rho, cardinal_state(label.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return rho;
}

namespace {

std::vector<std::string> products(const std::vector<std::string>& single, int n_qubits) {
  if (n_qubits < 1) throw DomainError("need at least one qubit");
  std::vector<std::string> out = single;
  for (int q = 1; q < n_qubits; ++q) {
    std::vector<std::string> next;
    for (const auto& a : out) {
      for (const auto& b : single) next.push_back(a + "," + b);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<std::string> cardinal_inputs(int n_qubits) {
  return products({"0", "1", "+", "-", "+i", "-i"}, n_qubits);
}

std::vector<std::string> minimal_inputs(int n_qubits) {
  return products({"0", "1", "+", "+i"}, n_qubits);
}

Matrix fit_chi(const std::vector<Matrix>& inputs, const std::vector<Matrix>& outputs,
               int n_qubits) {
  if (inputs.size() != outputs.size() || inputs.empty()) {
    throw DimensionError("fit_chi: need matching, non-empty input and output lists");
  }
  const auto& basis = core::pauli_basis(n_qubits);
  const auto nb = static_cast<Eigen::Index>(basis.size());
  const Eigen::Index d = basis.front().rows();
  const Eigen::Index rows = static_cast<Eigen::Index>(inputs.size()) * d * d;
  Matrix system(rows, nb * nb);
  Vector rhs(rows);
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (inputs[k].rows() != d || outputs[k].rows() != d) {
      throw DimensionError("fit_chi: state dimension does not match the qubit count");
    }
    const Eigen::Index r0 = static_cast<Eigen::Index>(k) * d * d;
    for (Eigen::Index m = 0; m < nb; ++m) {
      const Matrix left = basis[m] * inputs[k];
      for (Eigen::Index n = 0; n < nb; ++n) {
        const Matrix term = left * basis[n].adjoint();
        system.block(r0, m * nb + n, d * d, 1) = term.reshaped();
      }
    }
    rhs.segment(r0, d * d) = outputs[k].reshaped();
  }
  Eigen::CompleteOrthogonalDecomposition<Matrix> solver(system);
  if (solver.rank() < nb * nb) {
    throw NumericalError("fit_chi: input states do not span the operator space (rank " +
                         std::to_string(solver.rank()) + " of " + std::to_string(nb * nb) + ")");
  }
  const Vector x = solver.solve(rhs);
  Matrix chi(nb, nb);
  for (Eigen::Index m = 0; m < nb; ++m) {
    for (Eigen::Index n = 0; n < nb; ++n) chi(m, n) = x(m * nb + n);
  }
  return chi;
}

ProcessTomographyResult process_tomography(core::GateLabel gate,
                                           const std::vector<std::string>& inputs,
                                           const std::vector<core::QuantumState>& outputs,
                                           double internal_eta) {
  if (inputs.size() != outputs.size()) {
    throw DimensionError("process_tomography: one output per input required");
  }
  const int n = core::gate_qubits(gate);
  const core::KrausChannel loss = core::loss_channel(internal_eta);
  std::vector<Matrix> ideal_in;
  std::vector<Matrix> lossy_in;
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    Matrix rho = input_state(inputs[k]);
    std::vector<int> dims(static_cast<std::size_t>(n), 2);
    if (rho.rows() != (Eigen::Index{1} << n)) {
      throw DimensionError("process_tomography: input '" + inputs[k] + "' has wrong qubit count");
    }
    core::QuantumState lossy(rho, dims);
    for (int q = 0; q < n; ++q) lossy = core::apply_channel(lossy, loss, q);
    ideal_in.push_back(std::move(rho));
    lossy_in.push_back(lossy.matrix());
    out.push_back(outputs[k].matrix());
  }

  ProcessTomographyResult r{gate,
                            inputs,
                            outputs,
                            core::ideal_process(gate),
                            core::ideal_process(gate),
                            core::ideal_process(gate)};
  const Matrix raw_meas = fit_chi(ideal_in, out, n);
  const Matrix raw_int = fit_chi(lossy_in, out, n);
  r.projection_distance_meas = core::psd_projection_distance(raw_meas);
  r.projection_distance_int = core::psd_projection_distance(raw_int);
  r.chi_meas = core::project_psd(raw_meas);
  r.chi_int = core::project_psd(raw_int);
  r.f_tot = core::process_fidelity(r.chi_meas, r.chi_ideal);
  r.f_int = core::process_fidelity(r.chi_int, r.chi_ideal);
  return r;
}

ProcessTomographyResult process_tomography(core::GateLabel gate, const TomographyRunner& runner,
                                           const TomographyOptions& options) {
  const int n = core::gate_qubits(gate);
  const std::vector<std::string> inputs =
      options.inputs.empty() ? cardinal_inputs(n) : options.inputs;
  std::vector<core::QuantumState> outputs;
  outputs.reserve(inputs.size());
  for (const auto& label : inputs) outputs.push_back(runner(label));
  return process_tomography(gate, inputs, outputs, options.internal_eta);
}

nlohmann::json ProcessTomographyResult::to_json() const {
  nlohmann::json outs = nlohmann::json::array();
  for (const auto& o : outputs) outs.push_back(core::to_json(o));
  return {{"gate", core::to_string(gate)},
          {"F_tot", f_tot},
          {"F_int", f_int},
          {"chi_meas", core::to_json(chi_meas)},
          {"chi_int", core::to_json(chi_int)},
          {"chi_ideal", core::to_json(chi_ideal)},
          {"projection_distance_meas", projection_distance_meas},
          {"projection_distance_int", projection_distance_int},
          {"inputs", inputs},
          {"outputs", std::move(outs)}};
}

}  // namespace photongate::tomography
