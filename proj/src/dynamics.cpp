// Copyright 2026 The fermibath Authors
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

#include "fermibath/dynamics.hpp"

#include <cmath>
#include <numeric>
#include <unsupported/Eigen/MatrixFunctions>

#include "fermibath/states.hpp"

namespace fermibath {

namespace {

Vector hermitian_part_vec(const Vector& v, std::size_t n) {
  const OperatorMatrix m = devectorize(v, n);
  return vectorize(hermitian_part(m));
}

void rk4_advance(const SparseMatrix& l, Vector& x, double dt, Vector& k1,
                 Vector& k2, Vector& k3, Vector& k4, Vector& tmp) {
  k1.noalias() = l * x;
  tmp = x + (0.5 * dt) * k1;
  k2.noalias() = l * tmp;
  tmp = x + (0.5 * dt) * k2;
  k3.noalias() = l * tmp;
  tmp = x + dt * k3;
  k4.noalias() = l * tmp;
  x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double min_eigenvalue_of(const OperatorMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(hermitian_part(rho),
                                                       Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::string_view to_string(Method method) {
  return method == Method::RK4 ? "rk4" : "expm";
}

Method parse_method(std::string_view text) {
  if (text == "rk4") return Method::RK4;
  if (text == "expm" || text == "expm-oracle") return Method::ExpmOracle;
  throw DomainError("unknown integration method '" + std::string(text) +
                    "' (expected rk4 or expm)");
}

void TrajectoryConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  if (!(t_end >= dt) || !std::isfinite(t_end)) {
    throw DomainError("t_end must be finite and at least dt");
  }
  if (record_stride < 1) throw DomainError("record_stride must be at least 1");
}

OperatorMatrix hermitian_part(const OperatorMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

OperatorMatrix rk4_step(const Superoperator& generator,
                        const OperatorMatrix& rho, double dt, bool hermitize) {
  const std::size_t n = generator.state_dim();
  if (static_cast<std::size_t>(rho.rows()) != n ||
      static_cast<std::size_t>(rho.cols()) != n) {
    throw DomainError("density matrix dimension does not match generator");
  }
  Vector x = vectorize(rho);
  Vector k1, k2, k3, k4, tmp;
  rk4_advance(generator.matrix(), x, dt, k1, k2, k3, k4, tmp);
  if (!x.allFinite()) {
    throw IntegrationError("RK4 step produced non-finite entries (dt = " +
                           std::to_string(dt) + ")");
  }
  OperatorMatrix out = devectorize(x, n);
  return hermitize ? hermitian_part(out) : out;
}

ExpmPropagator::ExpmPropagator(const Superoperator& generator, double t)
    : state_dim_(generator.state_dim()) {
  const SparseMatrix& l = generator.matrix();
  const auto size = static_cast<std::size_t>(l.rows());
  DisjointSets sets(size);
  for (Eigen::Index col = 0; col < l.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(l, col); it; ++it) {
      sets.unite(static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()));
    }
  }
  std::vector<std::size_t> block_of(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t root = sets.find(i);
    if (block_of[root] == size) {
      block_of[root] = blocks_.size();
      blocks_.emplace_back();
    }
    blocks_[block_of[root]].indices.push_back(static_cast<Eigen::Index>(i));
  }

  std::vector<Eigen::Index> local(size);
  for (Block& block : blocks_) {
    const auto m = static_cast<Eigen::Index>(block.indices.size());
    for (Eigen::Index k = 0; k < m; ++k) local[block.indices[k]] = k;
    OperatorMatrix sub = OperatorMatrix::Zero(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
      for (SparseMatrix::InnerIterator it(l, block.indices[k]); it; ++it) {
        sub(local[it.row()], k) = it.value() * t;
      }
    }
    if (m == 1) {
      block.propagator = OperatorMatrix::Constant(1, 1, std::exp(sub(0, 0)));
    } else {
      block.propagator = sub.exp();
    }
  }
}

std::size_t ExpmPropagator::largest_block() const {
  std::size_t largest = 0;
  for (const Block& b : blocks_) largest = std::max(largest, b.indices.size());
  return largest;
}

Vector ExpmPropagator::apply(const Vector& vec_rho) const {
  if (static_cast<std::size_t>(vec_rho.size()) != state_dim_ * state_dim_) {
    throw DomainError("vector length does not match propagator");
  }
  Vector out(vec_rho.size());
  Vector local;
  for (const Block& block : blocks_) {
    const auto m = static_cast<Eigen::Index>(block.indices.size());
    if (m == 1) {
      out(block.indices[0]) = block.propagator(0, 0) * vec_rho(block.indices[0]);
      continue;
    }
    local.resize(m);
    for (Eigen::Index k = 0; k < m; ++k) local(k) = vec_rho(block.indices[k]);
    const Vector mapped = block.propagator * local;
    for (Eigen::Index k = 0; k < m; ++k) out(block.indices[k]) = mapped(k);
  }
  return out;
}

OperatorMatrix ExpmPropagator::apply(const OperatorMatrix& rho) const {
  return devectorize(apply(vectorize(rho)), state_dim_);
}

OperatorMatrix expm_evolve(const Superoperator& generator,
                           const OperatorMatrix& rho0, double t) {
  if (t == 0.0) return rho0;
  return ExpmPropagator(generator, t).apply(rho0);
}

Trajectory evolve(const Superoperator& generator, const DensityMatrix& rho0,
                  const TrajectoryConfig& config, const StateObserver& observer) {
  config.validate();
  const std::size_t n = generator.state_dim();
  if (rho0.dim() != n) {
    throw DomainError("initial state dimension does not match generator");
  }

  const double ratio = config.t_end / config.dt;
  if (ratio > static_cast<double>(config.max_steps)) {
    throw IntegrationError("t_end / dt requires more than " +
                           std::to_string(config.max_steps) + " steps");
  }
  const auto n_steps = static_cast<std::size_t>(std::ceil(ratio - 1e-9));
  const double last_dt = config.t_end - static_cast<double>(n_steps - 1) * config.dt;

  const Superoperator stepping = config.hermitize ? generator.hermitized() : generator;
  const SparseMatrix& l = stepping.matrix();

  Trajectory traj;
  EvolutionDiagnostics& diag = traj.diagnostics;

  const auto record = [&](double time, const Vector& x) {
    const OperatorMatrix rho = devectorize(x, n);
    traj.times.push_back(time);
    diag.max_trace_deviation =
        std::max(diag.max_trace_deviation, std::abs(rho.trace() - Complex(1.0, 0.0)));
    diag.max_hermiticity_defect =
        std::max(diag.max_hermiticity_defect, hermiticity_defect(generator, rho));
    const double lambda = min_eigenvalue_of(rho);
    if (lambda < diag.min_eigenvalue) {
      diag.min_eigenvalue = lambda;
      diag.min_eigenvalue_time = time;
    }
    if (lambda < kPositivityFlagThreshold) diag.positivity_flag = true;
    if (observer) observer(time, rho);
    if (config.store_states) traj.states.push_back(rho);
  };

  // Tr rho from vec(rho): every (n+1)-th entry.
  const auto track_trace = [&](const Vector& x) {
    Complex tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += x(static_cast<Eigen::Index>(i * (n + 1)));
    diag.max_trace_deviation = std::max(diag.max_trace_deviation, std::abs(tr - Complex(1.0, 0.0)));
  };

  const auto check_finite = [&](const Vector& x, std::size_t step) {
    if (!x.allFinite()) {
      throw IntegrationError("state became non-finite at step " + std::to_string(step) +
                             " (t = " + std::to_string(static_cast<double>(step) * config.dt) +
                             ")");
    }
  };

  Vector x = vectorize(rho0.matrix());
  record(0.0, x);

  if (config.method == Method::RK4) {
    Vector k1, k2, k3, k4, tmp;
    for (std::size_t step = 1; step <= n_steps; ++step) {
      const bool last = step == n_steps;
      rk4_advance(l, x, last ? last_dt : config.dt, k1, k2, k3, k4, tmp);
      if (config.hermitize) x = hermitian_part_vec(x, n);
      check_finite(x, step);
      track_trace(x);
      if (last) {
        record(config.t_end, x);
      } else if (step % config.record_stride == 0) {
        record(static_cast<double>(step) * config.dt, x);
      }
    }
  } else {
    const std::size_t stride = config.record_stride;
    const std::size_t full_segments = (n_steps - 1) / stride;
    const ExpmPropagator segment(stepping, static_cast<double>(stride) * config.dt);
    for (std::size_t s = 1; s <= full_segments; ++s) {
      x = segment.apply(x);
      if (config.hermitize) x = hermitian_part_vec(x, n);
      check_finite(x, s * stride);
      record(static_cast<double>(s * stride) * config.dt, x);
    }
    const double t_done = static_cast<double>(full_segments * stride) * config.dt;
    x = ExpmPropagator(stepping, config.t_end - t_done).apply(x);
    if (config.hermitize) x = hermitian_part_vec(x, n);
    check_finite(x, n_steps);
    record(config.t_end, x);
  }
  diag.steps = n_steps;
  return traj;
}

double ConvergenceReport::order() const {
  if (exact || orders.empty()) return std::numeric_limits<double>::quiet_NaN();
  return orders.back();
}

ConvergenceReport convergence_order(const Superoperator& generator,
                                    const OperatorMatrix& rho0, double t, double dt) {
  if (!(dt > 0.0) || !(t >= dt)) throw DomainError("convergence study needs 0 < dt <= t");
  ConvergenceReport report;
  report.t = t;
  const OperatorMatrix reference = expm_evolve(generator, rho0, t);
  const std::size_t n = generator.state_dim();
  for (int level = 0; level < 3; ++level) {
    const double h = dt / static_cast<double>(1 << level);
    const auto steps = static_cast<std::size_t>(std::llround(t / h));
    Vector x = vectorize(rho0);
    Vector k1, k2, k3, k4, tmp;
    for (std::size_t s = 0; s < steps; ++s) {
      rk4_advance(generator.matrix(), x, h, k1, k2, k3, k4, tmp);
    }
    report.step_sizes.push_back(h);
    report.errors.push_back(max_abs(devectorize(x, n) - reference));
  }
  report.exact = std::all_of(report.errors.begin(), report.errors.end(),
                             [](double e) { return e == 0.0; });
  if (!report.exact) {
    for (std::size_t k = 0; k + 1 < report.errors.size(); ++k) {
      report.orders.push_back(std::log2(report.errors[k] / report.errors[k + 1]));
    }
  }
  return report;
}

}  // namespace fermibath
