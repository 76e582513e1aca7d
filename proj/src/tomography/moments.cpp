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

#include "photongate/tomography/moments.hpp"

#include <cmath>

namespace photongate::tomography {

namespace {

Matrix power(const Matrix& m, int k) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

Complex MomentSet::get(int n, int m, int p, int q) const {
  if (n == 0 && m == 0 && p == 0 && q == 0) return 1.0;
  auto it = values.find({n, m, p, q});
  if (it == values.end()) {
    throw DomainError("moment set has no entry (" + std::to_string(n) + "," + std::to_string(m) +
                      "," + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  return it->second;
}

bool MomentSet::is_physical(double tol) const {
  auto check = [&](int n, int m, int p, int q) {
    const Complex num = get(n, m, p, q);
    return std::abs(num.imag()) <= tol && num.real() >= -tol;
  };
  if (!check(1, 1, 0, 0)) return false;
  if (std::abs(get(1, 0, 0, 0) - std::conj(get(0, 1, 0, 0))) > tol) return false;
  if (modes == 2) {
    if (!check(0, 0, 1, 1)) return false;
    if (std::abs(get(0, 0, 1, 0) - std::conj(get(0, 0, 0, 1))) > tol) return false;
  }
  return true;
}

MomentSet moments_of_state(const core::QuantumState& field, std::string reference) {
  const auto& dims = field.dims();
  MomentSet out;
  out.reference = std::move(reference);
  if (dims.size() == 1) {
    out.modes = 1;
    const Matrix a = dynamics::lowering_matrix(dims[0]);
    const Matrix ad = a.adjoint();
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; n + m <= 4; ++m) {
        if (n + m == 0) continue;
        out.set(n, m, 0, 0, field.expect(power(ad, n) * power(a, m)));
      }
    }
    return out;
  }
  if (dims.size() == 2) {
    out.modes = 2;
    const Matrix ia = Matrix::Identity(dims[0], dims[0]);
    const Matrix ib = Matrix::Identity(dims[1], dims[1]);
    const Matrix a = core::tensor(dynamics::lowering_matrix(dims[0]), ib);
    const Matrix b = core::tensor(ia, dynamics::lowering_matrix(dims[1]));
    const Matrix ad = a.adjoint();
    const Matrix bd = b.adjoint();
    for (int n = 0; n <= 2; ++n) {
      for (int m = 0; n + m <= 2; ++m) {
        for (int p = 0; p <= 2; ++p) {
          for (int q = 0; p + q <= 2; ++q) {
            if (n + m + p + q == 0) continue;
            out.set(n, m, p, q,
                    field.expect(power(ad, n) * power(a, m) * power(bd, p) * power(b, q)));
          }
        }
      }
    }
    return out;
  }
  throw DimensionError("moments_of_state: expected one or two field modes");
}

MomentSet extract_moments(const dynamics::TrajectoryResult& trajectory,
                          const dynamics::ReferenceMode& reference) {
  if (trajectory.dims.size() <= static_cast<std::size_t>(dynamics::kDetector)) {
    throw DimensionError("extract_moments: trajectory has no detector mode");
  }
  if (trajectory.times.empty() || trajectory.times.back() < reference.t_stop - 1e-6) {
    throw DomainError("extract_moments: trajectory ends before the reference window closes");
  }
  const core::QuantumState field =
      core::partial_trace(trajectory.final(), {static_cast<int>(dynamics::kDetector)});
  return moments_of_state(field, "detector");
}

namespace {

MomentSet rescale(const MomentSet& moments, double base) {
  MomentSet out = moments;
  for (auto& [key, value] : out.values) {
    const int order = key[0] + key[1] + key[2] + key[3];
    value *= std::pow(base, 0.5 * order);
  }
  return out;
}

}  // namespace

MomentSet normalize_moments(const MomentSet& moments, double reference_number) {
  if (!(reference_number > 0.0)) {
    throw DomainError("normalize_moments: reference photon number must be positive");
  }
  return rescale(moments, 1.0 / reference_number);
}

MomentSet normalize_moments(const MomentSet& moments, double reference_a, double reference_b) {
  if (!(reference_a > 0.0) || !(reference_b > 0.0)) {
    throw DomainError("normalize_moments: reference photon numbers must be positive");
  }
  MomentSet out = moments;
  for (auto& [key, value] : out.values) {
    value *= std::pow(reference_a, -0.5 * (key[0] + key[1])) *
             std::pow(reference_b, -0.5 * (key[2] + key[3]));
  }
  return out;
}

MomentSet attenuate_moments(const MomentSet& moments, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("attenuate_moments: eta outside [0, 1]");
  return rescale(moments, eta);
}

}  // namespace photongate::tomography
