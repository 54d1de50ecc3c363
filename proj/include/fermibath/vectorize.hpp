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

#include "fermibath/types.hpp"

namespace fermibath {

// Column-stacking: vec(rho)[i + j*n] = rho(i, j).
inline Vector vectorize(const OperatorMatrix& rho) {
  return Eigen::Map<const Vector>(rho.data(), rho.size());
}

inline OperatorMatrix devectorize(const Vector& v, std::size_t n) {
  if (static_cast<std::size_t>(v.size()) != n * n) {
    throw DomainError("vector of length " + std::to_string(v.size()) +
                      " cannot be reshaped to " + std::to_string(n) + "x" +
                      std::to_string(n));
  }
  return Eigen::Map<const OperatorMatrix>(v.data(), n, n);
}

}  // namespace fermibath
