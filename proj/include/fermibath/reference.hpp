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

#include <vector>

#include "fermibath/lattice.hpp"
#include "fermibath/types.hpp"

// Direct evaluation routes that share no code with the Kronecker and
// superoperator assembly. Used by the invariant suite as an oracle.
namespace fermibath::reference {

// c_mode built by acting on each basis state (sign counted from the
// occupied lower modes under Jordan-Wigner).
OperatorMatrix annihilation_by_action(const FockSpace& space, std::size_t mode,
                                      Convention conv);

// Right-hand side of the master equation evaluated with nested commutators
// on the dense rho, term by term. Operators are built once per instance.
class DirectGenerator {
 public:
  explicit DirectGenerator(const ModelSpec& spec);
  DirectGenerator(const FockSpace& space, std::vector<Bond> bonds, double gamma,
                  Convention conv);

  OperatorMatrix apply(const OperatorMatrix& rho) const;

 private:
  SparseMatrix hop(std::size_t from, std::size_t to, Spin spin) const;

  std::size_t n_sites_;
  std::vector<Bond> bonds_;
  double gamma_;
  std::vector<SparseMatrix> hops_;
  OperatorMatrix hamiltonian_;  // empty unless the unitary term is on
};

OperatorMatrix dissipator_action(const FockSpace& space,
                                 const std::vector<Bond>& bonds, double gamma,
                                 Convention conv, const OperatorMatrix& rho);

// As above, plus -i[H0, rho] when spec.unitary is set.
OperatorMatrix generator_action(const ModelSpec& spec, const OperatorMatrix& rho);

}  // namespace fermibath::reference
