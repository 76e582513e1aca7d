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

#include "photongate/dynamics/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "photongate/pulse/mode.hpp"

namespace photongate::dynamics {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::vector<Complex>;
constexpr double kTimeEps = 1e-9;

Complex sparse_trace_product(const SparseMatrix& op, const Eigen::Map<const Matrix>& rho) {
  Complex sum{};
  for (int col = 0; col < op.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(op, col); it; ++it) {
      sum += it.value() * rho(it.col(), it.row());
    }
  }
  return sum;
}

bool same_controls(const Controls& a, const Controls& b) {
  return a.source_coupling == b.source_coupling && a.gate_coupling == b.gate_coupling &&
         a.cphase_rate == b.cphase_rate && a.cphase_detuning == b.cphase_detuning;
}

/// Lindblad right-hand side for one segment of constant controls. The last
/// element of the state accumulates the leaked excitation.
class LindbladRhs {
 public:
  LindbladRhs(const ModelOperators& ops, const ReferenceMode* detector, const SparseMatrix& leak)
      : ops_(ops), detector_(detector), leak_(leak), dim_(ops.dim()), decay_(dim_, dim_),
        kr_(dim_, dim_), md_(dim_, dim_) {
    for (const auto& c : ops.collapse()) {
      if (c.nonZeros() > 0 && c.norm() > 0.0) jumps_.push_back(&c);
    }
    for (const auto* j : jumps_) decay_ += SparseMatrix(j->adjoint()) * (*j);
    if (detector_) {
      const SparseMatrix& v = ops.lowering(kDetector);
      vd_c1_ = SparseMatrix(v.adjoint()) * ops.output_operator();
      vd_v_ = SparseMatrix(v.adjoint()) * v;
    }
  }

  void set_controls(const Controls& c) {
    // K = -i H_eff with H_eff = H - (i/2) sum c^dag c
    k_ = Complex(0.0, -1.0) * ops_.hamiltonian(c) - 0.5 * decay_;
    k_.makeCompressed();
  }

  void operator()(const State& x, State& dx, double t) const {
    const Eigen::Map<const Matrix> rho(x.data(), dim_, dim_);
    Eigen::Map<Matrix> drho(dx.data(), dim_, dim_);
    kr_.noalias() = k_ * rho;
    Complex g{};
    if (detector_) {
      g = detector_->coupling(t);
      if (g != 0.0) {
        kr_.noalias() -= g * (vd_c1_ * rho);
        kr_.noalias() -= (0.5 * std::norm(g)) * (vd_v_ * rho);
      }
    }
    drho = kr_ + kr_.adjoint();
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
      const SparseMatrix& c = *jumps_[i];
      if (i == 0 && g != 0.0) {
        const SparseMatrix& v = ops_.lowering(kDetector);
        kr_.noalias() = c * rho;
        kr_.noalias() += std::conj(g) * (v * rho);
        md_ = kr_.adjoint();
        drho.noalias() += c * md_;
        drho.noalias() += std::conj(g) * (v * md_);
      } else {
        kr_.noalias() = c * rho;
        md_ = kr_.adjoint();
        drho.noalias() += c * md_;
      }
    }
    dx.back() = sparse_trace_product(leak_, rho).real();
  }

 private:
  const ModelOperators& ops_;
  const ReferenceMode* detector_;
  const SparseMatrix& leak_;
  int dim_;
  std::vector<const SparseMatrix*> jumps_;
  SparseMatrix decay_;
  SparseMatrix k_;
  SparseMatrix vd_c1_;
  SparseMatrix vd_v_;
  // Scratch buffers reused across calls.
  mutable Matrix kr_;
  mutable Matrix md_;
};

std::vector<int> level_offsets(const std::vector<int>& dims) {
  std::vector<int> off(dims.size() + 1, 0);
  for (std::size_t s = 0; s < dims.size(); ++s) off[s + 1] = off[s] + dims[s];
  return off;
}

}  // namespace

Complex ReferenceMode::coupling(double t) const {
  if (t < t_start || t > t_stop) return {};
  const double cum = cumulative(t);
  if (!(cum > 0.0)) throw NumericalError("reference mode: cumulative weight vanished");
  return -std::conj(amplitude(t)) / std::sqrt(cum);
}

ReferenceMode ReferenceMode::sech(double gamma, double center, double t_cut, Complex phase) {
  if (!(gamma > 0.0) || !(t_cut > 0.0)) throw DomainError("reference mode: bad sech parameters");
  ReferenceMode m;
  m.t_start = center - t_cut;
  m.t_stop = center + t_cut;
  m.amplitude = [gamma, center, phase](double t) {
    return phase * pulse::sech_amplitude(gamma, t - center);
  };
  m.cumulative = [gamma, center](double t) { return pulse::sech_cumulative(gamma, t - center); };
  return m;
}

double TrajectoryResult::population(std::size_t sample, int subsystem, int level) const {
  if (subsystem < 0 || static_cast<std::size_t>(subsystem) >= dims.size() || level < 0 ||
      level >= dims[subsystem]) {
    throw DimensionError("trajectory population: index out of range");
  }
  return populations.at(sample)[level_offsets(dims)[subsystem] + level];
}

void TrajectoryResult::write_csv(std::ostream& os) const {
  static const char* names[] = {"source_qubit", "source_converter", "gate_qubit",
                                "gate_converter", "detector"};
  os << "t,re_aout,im_aout";
  for (std::size_t s = 0; s < dims.size(); ++s) {
    for (int l = 0; l < dims[s]; ++l) os << ',' << names[s] << '_' << l;
  }
  os << '\n' << std::setprecision(17);
  for (std::size_t k = 0; k < times.size(); ++k) {
    os << times[k] << ',' << output_amplitude[k].real() << ',' << output_amplitude[k].imag();
    for (double p : populations[k]) os << ',' << p;
    os << '\n';
  }
}

TrajectoryResult evolve(const ModelOperators& ops, const pulse::PulseSchedule& schedule,
                        const Matrix& rho0, const EvolveOptions& options) {
  const int dim = ops.dim();
  if (rho0.rows() != dim || rho0.cols() != dim) {
    throw DimensionError("evolve: initial state must be " + std::to_string(dim) + " x " +
                         std::to_string(dim));
  }
  const ReferenceMode* detector = options.detector ? &*options.detector : nullptr;
  if (detector && !ops.model().virtual_detector) {
    throw DomainError("evolve: reference mode given but the model has no detector");
  }
  if (!(options.dt_out > 0.0)) throw DomainError("evolve: dt_out must be positive");
  const double t0 = options.t_start;
  const double t1 = options.t_stop < 0.0 ? schedule.duration() : options.t_stop;
  if (!(t1 >= t0)) throw DomainError("evolve: t_stop before t_start");

  // Hard points: sampling times, rotations and detector edges.
  std::vector<double> hard;
  for (int k = 0;; ++k) {
    const double t = t0 + k * options.dt_out;
    if (t > t1 + kTimeEps) break;
    hard.push_back(t);
  }
  if (t1 - hard.back() > kTimeEps) hard.push_back(t1);
  const std::size_t n_samples = hard.size();
  for (const auto& [t, r] : schedule.rotations()) hard.push_back(t);
  if (detector) {
    hard.push_back(detector->t_start);
    hard.push_back(detector->t_stop);
  }
  std::vector<double> points = schedule.breakpoints();
  points.insert(points.end(), hard.begin(), hard.end());
  std::sort(points.begin(), points.end());
  std::sort(hard.begin(), hard.end());
  std::vector<double> grid;
  for (double t : points) {
    if (t < t0 - kTimeEps || t > t1 + kTimeEps) continue;
    if (grid.empty() || t - grid.back() > kTimeEps) grid.push_back(std::clamp(t, t0, t1));
  }
  auto is_hard = [&hard](double t) {
    auto it = std::lower_bound(hard.begin(), hard.end(), t - kTimeEps);
    return it != hard.end() && std::abs(*it - t) <= kTimeEps;
  };
  auto is_sample = [&](double t) {
    const double k = (t - t0) / options.dt_out;
    return std::abs(k - std::round(k)) * options.dt_out <= kTimeEps ||
           std::abs(t - t1) <= kTimeEps;
  };

  const auto& c1 = ops.output_operator();
  const SparseMatrix leak = SparseMatrix(c1.adjoint()) * c1 +
                            SparseMatrix(ops.loss_operator().adjoint()) * ops.loss_operator();

  TrajectoryResult result;
  result.dims = ops.dims();
  const auto offsets = level_offsets(result.dims);
  result.times.reserve(n_samples);

  State x(static_cast<std::size_t>(dim) * dim + 1);
  Eigen::Map<Matrix>(x.data(), dim, dim) = rho0;
  x.back() = 0.0;

  auto record = [&](double t) {
    const Eigen::Map<const Matrix> rho(x.data(), dim, dim);
    result.times.push_back(t);
    result.output_amplitude.push_back(sparse_trace_product(c1, rho));
    std::vector<double> pops(static_cast<std::size_t>(offsets.back()), 0.0);
    for (int i = 0; i < dim; ++i) {
      const double p = rho(i, i).real();
      int rest = i;
      for (int s = static_cast<int>(result.dims.size()) - 1; s >= 0; --s) {
        pops[offsets[s] + rest % result.dims[s]] += p;
        rest /= result.dims[s];
      }
    }
    result.populations.push_back(std::move(pops));
    result.traces.push_back(rho.trace().real());
    if (options.store_states) result.states.emplace_back(rho);
  };
  auto apply_rotations = [&](double t) {
    for (const auto& [tr, r] : schedule.rotations()) {
      if (std::abs(tr - t) > kTimeEps || tr >= t1 - kTimeEps) continue;
      const SparseMatrix u = ops.rotation(r);
      Eigen::Map<Matrix> rho(x.data(), dim, dim);
      const Matrix tmp = u * rho;
      rho = (u * tmp.adjoint()).adjoint();
    }
  };

  LindbladRhs rhs(ops, detector, leak);
  auto stepper = odeint::make_controlled(options.atol, options.rtol,
                                         odeint::runge_kutta_dopri5<State>());
  Controls current;
  bool have_controls = false;
  double dt_guess = 0.1;

  apply_rotations(grid.front());
  if (is_sample(grid.front())) record(grid.front());
  std::size_t i = 0;
  while (i + 1 < grid.size()) {
    const double a = grid[i];
    const Controls c = Controls::at(schedule, 0.5 * (a + grid[i + 1]));
    // Extend the segment across soft breakpoints with unchanged controls.
    std::size_t j = i + 1;
    while (j + 1 < grid.size() && !is_hard(grid[j]) &&
           same_controls(c, Controls::at(schedule, 0.5 * (grid[j] + grid[j + 1])))) {
      ++j;
    }
    const double b = grid[j];
    if (!have_controls || !same_controls(c, current)) {
      rhs.set_controls(c);
      current = c;
      have_controls = true;
    }
    try {
      odeint::integrate_adaptive(stepper, std::ref(rhs), x, a, b, std::min(dt_guess, b - a));
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "evolve: integrator failed between t=" << a << " ns and t=" << b
          << " ns: " << e.what();
      throw NumericalError(msg.str());
    }
    for (const auto& v : x) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream msg;
        msg << "evolve: non-finite state at t=" << b << " ns";
        throw NumericalError(msg.str());
      }
    }
    dt_guess = std::max(0.05, std::min(1.0, b - a));
    apply_rotations(b);
    if (is_sample(b)) record(b);
    i = j;
  }

  Eigen::Map<const Matrix> rho(x.data(), dim, dim);
  result.final_state = core::hermitian_part(rho);
  result.leaked = x.back().real();
  return result;
}

TrajectoryResult evolve(const CascadedModel& model, const pulse::PulseSchedule& schedule,
                        const Matrix& rho0, const EvolveOptions& options) {
  return evolve(ModelOperators(model), schedule, rho0, options);
}

std::vector<Complex> output_amplitude(const TrajectoryResult& trajectory,
                                      const CascadedModel& model) {
  if (trajectory.states.size() != trajectory.times.size()) {
    throw DomainError("output_amplitude: trajectory was run without stored states");
  }
  const ModelOperators ops(model);
  const Matrix c1(ops.output_operator());
  std::vector<Complex> out;
  out.reserve(trajectory.states.size());
  for (const auto& rho : trajectory.states) {
    if (rho.rows() != c1.rows()) throw DimensionError("output_amplitude: model dimension");
    out.push_back((c1 * rho).trace());
  }
  return out;
}

Vector qubit_vector(Complex g, Complex e) {
  Vector v = Vector::Zero(3);
  v(0) = g;
  v(1) = e;
  return v;
}

Matrix product_state(const CascadedModel& model, const Vector& source_qubit,
                     const Vector& gate_qubit) {
  if (source_qubit.size() != 3 || gate_qubit.size() != 3) {
    throw DimensionError("product_state: transmon vectors must have 3 entries");
  }
  const Vector s = source_qubit / source_qubit.norm();
  const Vector g = gate_qubit / gate_qubit.norm();
  Matrix vac = Matrix::Zero(2, 2);
  vac(0, 0) = 1.0;
  std::vector<Matrix> factors{s * s.adjoint(), vac, g * g.adjoint(), vac};
  if (model.virtual_detector) factors.push_back(vac);
  return core::tensor(factors);
}

Matrix ground_state(const CascadedModel& model) {
  return product_state(model, qubit_vector(1.0, 0.0), qubit_vector(1.0, 0.0));
}

}  // namespace photongate::dynamics
