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

#ifndef PHOTONGATE_CORE_TYPES_HPP
#define PHOTONGATE_CORE_TYPES_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace photongate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Converts a frequency given as f/2pi in MHz to an angular rate in rad/ns.
constexpr double mhz_to_rad_per_ns(double mhz) { return kTwoPi * mhz * 1e-3; }
constexpr double rad_per_ns_to_mhz(double rate) { return rate / (kTwoPi * 1e-3); }

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands whose shapes or subsystem structure do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation (bad label, negative rate, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Integration, inversion or fit that failed numerically.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace photongate

#endif  // PHOTONGATE_CORE_TYPES_HPP
