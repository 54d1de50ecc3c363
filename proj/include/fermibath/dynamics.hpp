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

#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string_view>
#include <vector>

#include "fermibath/superoperator.hpp"
#include "fermibath/types.hpp"
#include "fermibath/vectorize.hpp"

namespace fermibath {

class DensityMatrix;

enum class Method { RK4, ExpmOracle };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

struct TrajectoryConfig {
  double t_end = 20.0;
  double dt = 1e-3;
  std::size_t record_stride = 100;
  Method method = Method::RK4;
  bool hermitize = true;
  bool store_states = false;
  std::size_t max_steps = 100'000'000;

  void validate() const;
};

// Minimum eigenvalues below this are flagged, not rejected.
inline constexpr double kPositivityFlagThreshold = -1e-6;

struct EvolutionDiagnostics {
  std::size_t steps = 0;
  double max_trace_deviation = 0.0;
  // Of the raw generator on each recorded state.
  double max_hermiticity_defect = 0.0;
  double min_eigenvalue = std::numeric_limits<double>::infinity();
  double min_eigenvalue_time = 0.0;
  bool positivity_flag = false;
};

struct Trajectory {
  std::vector<double> times;
  // Populated only when TrajectoryConfig::store_states is set.
  std::vector<OperatorMatrix> states;
  EvolutionDiagnostics diagnostics;
};

// Called for every recorded time, including t = 0 and the final time.
using StateObserver = std::function<void(double time, const OperatorMatrix& rho)>;

OperatorMatrix hermitian_part(const OperatorMatrix& m);

// Classical fourth-order Runge-Kutta step of rho' = L(rho). Throws
// IntegrationError on non-finite output.
OperatorMatrix rk4_step(const Superoperator& generator,
                        const OperatorMatrix& rho, double dt,
                        bool hermitize = false);

// exp(L t) restricted to the connected blocks of L's sparsity graph; each
// block is exponentiated densely with Pade scaling-and-squaring, so the
// error is at the level of double rounding times the block norm.
class ExpmPropagator {
 public:
  ExpmPropagator(const Superoperator& generator, double t);

  Vector apply(const Vector& vec_rho) const;
  OperatorMatrix apply(const OperatorMatrix& rho) const;
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t largest_block() const;

 private:
  struct Block {
    std::vector<Eigen::Index> indices;
    OperatorMatrix propagator;
  };
  std::size_t state_dim_ = 0;
  std::vector<Block> blocks_;
};

OperatorMatrix expm_evolve(const Superoperator& generator,
                           const OperatorMatrix& rho0, double t);

// Integrates from rho0 with the configured method. With hermitize set the
// step uses generator.hermitized() and the state is projected to its
// Hermitian part after every step; diagnostics still use the raw generator.
Trajectory evolve(const Superoperator& generator, const DensityMatrix& rho0,
                  const TrajectoryConfig& config,
                  const StateObserver& observer = {});

struct ConvergenceReport {
  double t = 0.0;
  std::vector<double> step_sizes;  // dt, dt/2, dt/4
  std::vector<double> errors;      // max-norm vs expm reference
  std::vector<double> orders;      // log2(e_k / e_{k+1})
  bool exact = false;              // every error is identically zero

  double order() const;  // finest-pair estimate; NaN when exact
};

ConvergenceReport convergence_order(const Superoperator& generator,
                                    const OperatorMatrix& rho0, double t = 1.0,
                                    double dt = 0.1);

}  // namespace fermibath
