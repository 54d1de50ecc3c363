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

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fermibath/config.hpp"
#include "fermibath/types.hpp"

namespace fermibath {

// Entries with independent standard-normal real and imaginary parts.
OperatorMatrix random_matrix(std::size_t dim, std::mt19937_64& rng);
OperatorMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng);
// G G^dag / Tr(G G^dag): a full-rank density matrix.
OperatorMatrix random_density(std::size_t dim, std::mt19937_64& rng);

enum class CheckStatus { Pass, Fail, ExpectedFail, Info };

std::string_view to_string(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Info;
  std::string detail;
  double seconds = 0.0;
};

struct ValidationReport {
  std::vector<Check> checks;

  // False if any check has status Fail.
  bool ok() const;
  void print(std::ostream& out) const;
};

inline constexpr std::size_t kValidationSamples = 100;
inline constexpr double kOracleTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kObservableAgreement = 1e-7;
inline constexpr double kExpectedOrder = 4.0;
inline constexpr double kOrderTolerance = 0.2;

// Invariant suite for the model, trajectory settings and initial state in
// `config`. Random inputs are drawn from config.seed.
ValidationReport validate(const RunConfig& config);

}  // namespace fermibath
