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
#include <string>
#include <string_view>
#include <vector>

#include "fermibath/states.hpp"
#include "fermibath/superoperator.hpp"
#include "fermibath/types.hpp"

namespace fermibath {

inline constexpr double kObservableResidueTolerance = 1e-10;

// Overlap fidelity Tr(rho_f rho_t). This is the Hilbert-Schmidt overlap, not
// the Uhlmann fidelity; for the diagonal targets used here it is the
// probability weight rho_t assigns to rho_f's support. Throws
// ObservableError when the imaginary residue exceeds the tolerance.
double fidelity(const OperatorMatrix& rho_f, const OperatorMatrix& rho_t);

// Diagonal projector onto basis states with at least one particle of either
// spin on `site`.
struct OccupationProjector {
  std::size_t site = 0;
  OperatorMatrix matrix;
};

OccupationProjector occupation_projector(const FockSpace& space, std::size_t site);

// Tr(rho P_site). Not normalised across sites.
double occupation_probability(const OccupationProjector& projector,
                              const OperatorMatrix& rho);

// Re Tr(rho^2).
double purity(const OperatorMatrix& rho);

// d/(d-1) (1 - Tr rho^2) with d the Hilbert-space dimension, clamped to
// [0, 1] once the excess is checked against the residue tolerance.
double linear_entropy(const OperatorMatrix& rho);

// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const OperatorMatrix& rho);

enum class ObservableKind {
  Fidelity,
  Occupation,
  Entropy,
  Purity,
  MinEigenvalue,
  HermiticityDefect,
};

struct ObservableSpec {
  ObservableKind kind = ObservableKind::Entropy;
  FinalState target = FinalState::Empty;  // Fidelity only
  std::size_t site = 0;                   // Occupation only, zero-based

  // CSV column header, e.g. F_full, P_occ_1, S_L.
  std::string column() const;
  // Config spelling, e.g. fidelity:full, occupation:1, entropy.
  std::string name() const;
  friend bool operator==(const ObservableSpec&, const ObservableSpec&) = default;
};

// Sites are one-based in the textual form ("occupation:1" is site 0).
ObservableSpec parse_observable(std::string_view text);

// Every fidelity target, every site occupation and the entropy.
std::vector<ObservableSpec> default_observables(std::size_t n_sites);

// Evaluates a fixed list of observables on density-matrix snapshots.
class ObservableSet {
 public:
  // `generator` is required only for HermiticityDefect columns.
  ObservableSet(const FockSpace& space, std::vector<ObservableSpec> specs,
                const Superoperator* generator = nullptr,
                Convention conv = Convention::JordanWigner);

  const std::vector<ObservableSpec>& specs() const { return specs_; }
  std::vector<std::string> header() const;
  std::vector<double> evaluate(const OperatorMatrix& rho) const;

 private:
  std::vector<ObservableSpec> specs_;
  std::vector<OperatorMatrix> targets_;
  std::vector<OccupationProjector> projectors_;
  const Superoperator* generator_;
};

struct SpinExchangeReport {
  bool declared = false;
  FinalState target = FinalState::UpDown5050;
  double initial_value = 0.0;
  double peak_value = 0.0;
  double crossing_time = -1.0;  // first time above threshold, -1 if never
};

// Exchange is declared when the fidelity against up-down-5050 (or failing
// that down-up-5050) starts at zero and later exceeds `threshold`.
SpinExchangeReport detect_spin_exchange(const std::vector<double>& times,
                                        const std::vector<double>& fidelity_up_down,
                                        const std::vector<double>& fidelity_down_up,
                                        double threshold = 0.01);

}  // namespace fermibath
