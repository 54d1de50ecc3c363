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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace fermibath {

using Complex = std::complex<double>;

// Dense operator on the 4^N dimensional Fock space.
using OperatorMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range indices, inconsistent dimensions, invalid parameters.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Integrator produced non-finite values or exceeded its step budget.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

// Observable evaluation hit a residue larger than its tolerance.
class ObservableError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

inline double max_abs(const OperatorMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace fermibath
