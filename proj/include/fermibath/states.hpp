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

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "fermibath/fock.hpp"
#include "fermibath/types.hpp"

namespace fermibath {

// Unit-trace Hermitian positive semidefinite operator, validated once at
// construction. Dynamics produce plain OperatorMatrix snapshots afterwards.
class DensityMatrix {
 public:
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kEigenvalueTolerance = 1e-12;

  // Throws DomainError if rho violates any invariant.
  explicit DensityMatrix(OperatorMatrix rho,
                         Convention conv = Convention::JordanWigner);

  // Classical mixture of basis projectors; weights must sum to one.
  static DensityMatrix diagonal_mixture(
      const FockSpace& space, const std::vector<std::pair<FockState, double>>& weights,
      Convention conv = Convention::JordanWigner);

  static DensityMatrix maximally_mixed(const FockSpace& space,
                                       Convention conv = Convention::JordanWigner);

  const OperatorMatrix& matrix() const { return rho_; }
  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  Convention convention() const { return conv_; }

 private:
  OperatorMatrix rho_;
  Convention conv_;
};

enum class InitialState {
  Empty,
  MaxEntangled,
  Down30First70Third,
  Down70First30Third,
};

enum class FinalState {
  Empty,
  Full,
  DownDown5050,
  UpUp5050,
  DownUp5050,
  UpDown5050,
};

inline constexpr std::array kInitialStates = {
    InitialState::Empty, InitialState::MaxEntangled,
    InitialState::Down30First70Third, InitialState::Down70First30Third};

inline constexpr std::array kFinalStates = {
    FinalState::Empty,        FinalState::Full,       FinalState::DownDown5050,
    FinalState::UpUp5050,     FinalState::DownUp5050, FinalState::UpDown5050};

std::string_view to_string(InitialState s);
std::string_view to_string(FinalState s);
std::string_view describe(InitialState s);
std::string_view describe(FinalState s);
InitialState parse_initial_state(std::string_view name);
FinalState parse_final_state(std::string_view name);

// "First" is site 0 and "third" is the last site, so N = 3 reproduces the
// three-site states exactly.
DensityMatrix initial_state(const FockSpace& space, InitialState name,
                            Convention conv = Convention::JordanWigner);
DensityMatrix final_state(const FockSpace& space, FinalState name,
                          Convention conv = Convention::JordanWigner);

}  // namespace fermibath
