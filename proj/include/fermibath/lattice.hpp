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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermibath/fock.hpp"
#include "fermibath/types.hpp"

namespace fermibath {

struct LatticeTopology {
  std::size_t n_sites = 3;
  bool closed = false;
};

std::string_view to_string(const LatticeTopology& topology);
// "open" or "closed".
bool parse_closed(std::string_view text);

// Directed nearest-neighbour pair (l, l + r).
struct Bond {
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const Bond&, const Bond&) = default;
};

// Open: (0,1), (1,2), ... ; closed appends the wrap bond (n-1, 0). A wrap
// bond that duplicates an existing pair (n_sites == 2) is dropped.
std::vector<Bond> bond_list(const LatticeTopology& topology);

// Natural units, hbar = 1.
struct HamiltonianParameters {
  double J = 1.0;        // hopping
  double U = 0.0;        // on-site interaction
  double delta_R = 1.0;  // Rabi laser energy
  double omega_R = 0.0;  // Raman laser energy
};

// Bath coupling constants; the bath-mode sum is collapsed into mode_sum.
struct CouplingParameters {
  double a_S = 1.0;      // s-wave scattering length
  double mu_R = 1.0;     // reduced mass
  double rho_C = 1.0;    // bath density
  double volume = 1.0;   // bath volume
  double mode_sum = 1.0; // sum_m A_{m,l}^2 (u_m + v_m)^2
};

// gamma = 2 pi^2 a_S^2 rho_C mode_sum / (V delta_R mu_R^2). The 1/i of the
// master-equation prefactor is applied by the generator, not here.
double effective_rate(const CouplingParameters& coupling,
                      const HamiltonianParameters& hamiltonian);

struct ModelSpec {
  LatticeTopology topology;
  HamiltonianParameters hamiltonian;
  // When set, the rate is derived from these; otherwise `gamma` is used.
  std::optional<CouplingParameters> coupling;
  double gamma = 1.0;
  Convention convention = Convention::JordanWigner;
  // Adds -i[H0, rho]. Off by default: the dissipator alone is the
  // interaction-picture generator.
  bool unitary = false;
  std::size_t max_sites = FockSpace::kDefaultMaxSites;

  double rate() const;
  FockSpace space() const { return FockSpace(topology.n_sites, max_sites); }
  // Throws DomainError on any violated invariant.
  void validate() const;
};

// H0 = -J sum_<jk> sum_{s,s'} c+_{j s} c_{k s'}  (both bond directions)
//      + U/2 sum_{j,s} c+_{j s} c+_{j s} c_{j s} c_{j s}
//      - delta_R/2 sum_j (n_{j up} - n_{j dn})
//      + Omega_R/2 sum_j (c+_{j up} c_{j dn} + c+_{j dn} c_{j up})
OperatorMatrix build_free_hamiltonian(const ModelSpec& spec);

}  // namespace fermibath
