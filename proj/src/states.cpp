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

#include "fermibath/states.hpp"

#include <cmath>

namespace fermibath {

namespace {

struct NameEntry {
  std::string_view name;
  std::string_view description;
};

constexpr NameEntry kInitialNames[] = {
    {"empty", "pure state with no particles on the lattice"},
    {"max-entangled", "1/2 empty lattice + 1/2 full lattice"},
    {"down30-first-70-third", "3/10 spin-down on the first site + 7/10 spin-down on the third site"},
    {"down70-first-30-third", "7/10 spin-down on the first site + 3/10 spin-down on the third site"},
};

constexpr NameEntry kFinalNames[] = {
    {"empty", "lattice empty"},
    {"full", "lattice full"},
    {"down-down-5050", "1/2 spin-down on first site + 1/2 spin-down on third site"},
    {"up-up-5050", "1/2 spin-up on first site + 1/2 spin-up on third site"},
    {"down-up-5050", "1/2 spin-down on first site + 1/2 spin-up on third site"},
    {"up-down-5050", "1/2 spin-up on first site + 1/2 spin-down on third site"},
};

FockState single(const FockSpace& space, std::size_t site, Spin spin) {
  return FockState().with(space.mode_index(site, spin), true);
}

FockState full_state(const FockSpace& space) {
  FockState s;
  for (std::size_t m = 0; m < space.n_modes(); ++m) s = s.with(m, true);
  return s;
}

}  // namespace

DensityMatrix::DensityMatrix(OperatorMatrix rho, Convention conv)
    : rho_(std::move(rho)), conv_(conv) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw DomainError("density matrix must be square and non-empty");
  }
  if (!rho_.allFinite()) throw DomainError("density matrix has non-finite entries");
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw DomainError("density matrix trace is " + std::to_string(tr.real()) +
                      (tr.imag() != 0.0 ? " + " + std::to_string(tr.imag()) + "i" : "") +
                      ", expected 1");
  }
  if (max_abs(rho_ - rho_.adjoint()) > kHermitianTolerance) {
    throw DomainError("density matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(rho_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kEigenvalueTolerance) {
    throw DomainError("density matrix has a negative eigenvalue " +
                      std::to_string(solver.eigenvalues().minCoeff()));
  }
}

DensityMatrix DensityMatrix::diagonal_mixture(
    const FockSpace& space, const std::vector<std::pair<FockState, double>>& weights,
    Convention conv) {
  OperatorMatrix rho = OperatorMatrix::Zero(space.dim(), space.dim());
  for (const auto& [state, weight] : weights) {
    if (!(weight >= 0.0)) throw DomainError("mixture weights must be non-negative");
    const std::size_t i = space.basis_index(state);
    rho(i, i) += weight;
  }
  return DensityMatrix(std::move(rho), conv);
}

DensityMatrix DensityMatrix::maximally_mixed(const FockSpace& space, Convention conv) {
  const double w = 1.0 / static_cast<double>(space.dim());
  return DensityMatrix(OperatorMatrix::Identity(space.dim(), space.dim()) * w, conv);
}

std::string_view to_string(InitialState s) {
  return kInitialNames[static_cast<std::size_t>(s)].name;
}
std::string_view to_string(FinalState s) {
  return kFinalNames[static_cast<std::size_t>(s)].name;
}
std::string_view describe(InitialState s) {
  return kInitialNames[static_cast<std::size_t>(s)].description;
}
std::string_view describe(FinalState s) {
  return kFinalNames[static_cast<std::size_t>(s)].description;
}

InitialState parse_initial_state(std::string_view name) {
  for (InitialState s : kInitialStates) {
    if (to_string(s) == name) return s;
  }
  throw DomainError("unknown initial state '" + std::string(name) + "'");
}

FinalState parse_final_state(std::string_view name) {
  for (FinalState s : kFinalStates) {
    if (to_string(s) == name) return s;
  }
  throw DomainError("unknown final state '" + std::string(name) + "'");
}

DensityMatrix initial_state(const FockSpace& space, InitialState name, Convention conv) {
  const std::size_t first = 0;
  const std::size_t third = space.n_sites() - 1;
  switch (name) {
    case InitialState::Empty:
      return DensityMatrix::diagonal_mixture(space, {{FockState(), 1.0}}, conv);
    case InitialState::MaxEntangled:
      return DensityMatrix::diagonal_mixture(
          space, {{FockState(), 0.5}, {full_state(space), 0.5}}, conv);
    case InitialState::Down30First70Third:
      return DensityMatrix::diagonal_mixture(
          space, {{single(space, first, Spin::Down), 0.3},
                  {single(space, third, Spin::Down), 0.7}}, conv);
    case InitialState::Down70First30Third:
      return DensityMatrix::diagonal_mixture(
          space, {{single(space, first, Spin::Down), 0.7},
                  {single(space, third, Spin::Down), 0.3}}, conv);
  }
  throw DomainError("unhandled initial state");
}

DensityMatrix final_state(const FockSpace& space, FinalState name, Convention conv) {
  const std::size_t first = 0;
  const std::size_t third = space.n_sites() - 1;
  const auto half = [&](Spin at_first, Spin at_third) {
    return DensityMatrix::diagonal_mixture(
        space, {{single(space, first, at_first), 0.5},
                {single(space, third, at_third), 0.5}}, conv);
  };
  switch (name) {
    case FinalState::Empty:
      return DensityMatrix::diagonal_mixture(space, {{FockState(), 1.0}}, conv);
    case FinalState::Full:
      return DensityMatrix::diagonal_mixture(space, {{full_state(space), 1.0}}, conv);
    case FinalState::DownDown5050:
      return half(Spin::Down, Spin::Down);
    case FinalState::UpUp5050:
      return half(Spin::Up, Spin::Up);
    case FinalState::DownUp5050:
      return half(Spin::Down, Spin::Up);
    case FinalState::UpDown5050:
      return half(Spin::Up, Spin::Down);
  }
  throw DomainError("unhandled final state");
}

}  // namespace fermibath
