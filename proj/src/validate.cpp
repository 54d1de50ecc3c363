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

#include "fermibath/validate.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "fermibath/dynamics.hpp"
#include "fermibath/fock.hpp"
#include "fermibath/observables.hpp"
#include "fermibath/reference.hpp"
#include "fermibath/states.hpp"
#include "fermibath/superoperator.hpp"

namespace fermibath {

OperatorMatrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto n = static_cast<Eigen::Index>(dim);
  OperatorMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      m(i, j) = Complex(re, normal(rng));
    }
  }
  return m;
}

OperatorMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  const OperatorMatrix g = random_matrix(dim, rng);
  return (g + g.adjoint()) * 0.5;
}

OperatorMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  const OperatorMatrix g = random_matrix(dim, rng);
  OperatorMatrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()).eval() * 0.5;
  return rho / rho.trace().real();
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::ExpectedFail: return "XFAIL";
    case CheckStatus::Info: return "INFO";
  }
  return "?";
}

bool ValidationReport::ok() const {
  for (const Check& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

void ValidationReport::print(std::ostream& out) const {
  std::size_t width = 0;
  for (const Check& c : checks) width = std::max(width, c.name.size());
  for (const Check& c : checks) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%8.3fs", c.seconds);
    out << to_string(c.status) << std::string(6 - to_string(c.status).size(), ' ') << c.name
        << std::string(width - c.name.size() + 2, ' ') << timing << "  " << c.detail << '\n';
  }
  out << (ok() ? "validation passed" : "validation FAILED") << '\n';
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Check timed(std::string name, const std::function<void(Check&)>& body) {
  Check check;
  check.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.status = CheckStatus::Fail;
    check.detail = std::string("error: ") + e.what();
  }
  check.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check;
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

double max_abs_diff(const std::vector<std::vector<double>>& a,
                    const std::vector<std::vector<double>>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    }
  }
  return worst;
}

}  // namespace

ValidationReport validate(const RunConfig& config) {
  ValidationReport report;
  config.validate();
  const ModelSpec& spec = config.model;
  const FockSpace space = spec.space();
  const std::size_t dim = space.dim();
  std::mt19937_64 rng(config.seed);

  report.checks.push_back(timed("anticommutators", [&](Check& c) {
    const AnticommutatorReport r = verify_anticommutators(space, spec.convention);
    c.detail = std::string(to_string(spec.convention)) + ", " + std::to_string(r.pairs_checked) +
               " pairs, max deviation " + sci(r.max_deviation());
    if (r.holds()) {
      c.status = CheckStatus::Pass;
    } else if (spec.convention == Convention::LocalPauli) {
      c.status = CheckStatus::ExpectedFail;
      c.detail += ", " + std::to_string(r.violations.size()) + " violating pairs (no parity string)";
    } else {
      c.status = CheckStatus::Fail;
    }
  }));

  const Superoperator generator = build_generator(spec);

  report.checks.push_back(timed("trace annihilation", [&](Check& c) {
    double worst = 0.0;
    for (std::size_t k = 0; k < kValidationSamples; ++k) {
      worst = std::max(worst, std::abs(generator.apply(random_matrix(dim, rng)).trace()));
    }
    c.status = pass_if(worst <= kOracleTolerance);
    c.detail = "max |Tr L(X)| " + sci(worst) + " over " + std::to_string(kValidationSamples) +
               " random matrices";
  }));

  report.checks.push_back(timed("oracle equivalence", [&](Check& c) {
    const reference::DirectGenerator direct(spec);
    double worst = 0.0;
    for (std::size_t k = 0; k < kValidationSamples; ++k) {
      const OperatorMatrix rho = random_hermitian(dim, rng);
      worst = std::max(worst, max_abs(generator.apply(rho) - direct.apply(rho)));
    }
    c.status = pass_if(worst <= kOracleTolerance);
    c.detail = "max |L rho - direct| " + sci(worst) + ", " + std::to_string(generator.nonzeros()) +
               " nonzeros";
  }));

  report.checks.push_back(timed("linearity", [&](Check& c) {
    const OperatorMatrix a = random_matrix(dim, rng);
    const OperatorMatrix b = random_matrix(dim, rng);
    const Complex alpha(0.3, -1.7), beta(-2.2, 0.4);
    const double err = max_abs(generator.apply(OperatorMatrix(alpha * a + beta * b)) -
                               (alpha * generator.apply(a) + beta * generator.apply(b)));
    c.status = pass_if(err <= kOracleTolerance);
    c.detail = "max deviation " + sci(err);
  }));

  report.checks.push_back(timed("gamma scaling", [&](Check& c) {
    const std::vector<Bond> bonds = bond_list(spec.topology);
    const double scale = 2.5;
    const Superoperator unit = build_dissipator(space, bonds, 1.0, spec.convention);
    const Superoperator scaled = build_dissipator(space, bonds, scale, spec.convention);
    const double err = (scaled - unit * Complex(scale, 0.0)).is_zero()
                           ? 0.0
                           : max_abs(OperatorMatrix((scaled - unit * Complex(scale, 0.0)).matrix()));
    c.status = pass_if(err <= kOracleTolerance);
    c.detail = "max |L(2.5) - 2.5 L(1)| " + sci(err);
  }));

  report.checks.push_back(timed("hermiticity defect", [&](Check& c) {
    double worst = 0.0;
    for (std::size_t k = 0; k < 10; ++k) {
      worst = std::max(worst, hermiticity_defect(generator, random_hermitian(dim, rng)));
    }
    c.status = CheckStatus::Info;
    c.detail = "raw generator, max over random Hermitian rho " + sci(worst) +
               (config.trajectory.hermitize ? " (hermitize on)" : " (hermitize off)");
  }));

  const DensityMatrix rho0 = config.initial_state();
  const ObservableSet observables(space, config.resolved_observables(), &generator,
                                  spec.convention);
  std::vector<std::vector<double>> rk4_rows;
  Trajectory rk4;

  report.checks.push_back(timed("trace conservation", [&](Check& c) {
    TrajectoryConfig tc = config.trajectory;
    tc.method = Method::RK4;
    tc.store_states = false;
    rk4 = evolve(generator, rho0, tc, [&](double, const OperatorMatrix& rho) {
      rk4_rows.push_back(observables.evaluate(rho));
    });
    const double dev = rk4.diagnostics.max_trace_deviation;
    c.status = pass_if(dev <= kTraceTolerance);
    c.detail = "max |Tr rho - 1| " + sci(dev) + " over " + std::to_string(rk4.diagnostics.steps) +
               " RK4 steps";
  }));

  report.checks.push_back(timed("rk4 vs expm observables", [&](Check& c) {
    TrajectoryConfig tc = config.trajectory;
    tc.method = Method::ExpmOracle;
    tc.store_states = false;
    std::vector<std::vector<double>> rows;
    evolve(generator, rho0, tc,
           [&](double, const OperatorMatrix& rho) { rows.push_back(observables.evaluate(rho)); });
    const double err = max_abs_diff(rk4_rows, rows);
    c.status = pass_if(err <= kObservableAgreement);
    c.detail = "max discrepancy " + sci(err) + " over " + std::to_string(rows.size()) + " records";
  }));

  report.checks.push_back(timed("convergence order", [&](Check& c) {
    const ConvergenceReport r = convergence_order(generator, random_density(dim, rng));
    if (r.exact) {
      c.status = CheckStatus::Pass;
      c.detail = "generator is zero, error identically 0";
      return;
    }
    const double order = r.order();
    c.status = pass_if(std::abs(order - kExpectedOrder) <= kOrderTolerance);
    c.detail = "order " + sci(order) + ", errors " + sci(r.errors[0]) + " " + sci(r.errors[1]) +
               " " + sci(r.errors[2]);
  }));

  report.checks.push_back(timed("minimum eigenvalue", [&](Check& c) {
    c.status = CheckStatus::Info;
    c.detail = sci(rk4.diagnostics.min_eigenvalue) + " at t = " +
               sci(rk4.diagnostics.min_eigenvalue_time) +
               (rk4.diagnostics.positivity_flag ? " (flagged)" : "");
  }));

  return report;
}

}  // namespace fermibath
