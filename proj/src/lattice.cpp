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

#include "fermibath/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fermibath {

std::string_view to_string(const LatticeTopology& topology) {
  return topology.closed ? "closed" : "open";
}

bool parse_closed(std::string_view text) {
  if (text == "open") return false;
  if (text == "closed") return true;
  throw DomainError("unknown topology '" + std::string(text) +
                    "' (expected open or closed)");
}

std::vector<Bond> bond_list(const LatticeTopology& topology) {
  if (topology.n_sites < 2) {
    throw DomainError("a chain needs at least two sites, got " +
                      std::to_string(topology.n_sites));
  }
  std::vector<Bond> bonds;
  for (std::size_t i = 0; i + 1 < topology.n_sites; ++i) {
    bonds.push_back({i, i + 1});
  }
  if (topology.closed) {
    const Bond wrap{topology.n_sites - 1, 0};
    const bool duplicate = std::any_of(bonds.begin(), bonds.end(), [&](const Bond& b) {
      return (b.from == wrap.from && b.to == wrap.to) ||
             (b.from == wrap.to && b.to == wrap.from);
    });
    if (!duplicate) bonds.push_back(wrap);
  }
  return bonds;
}

double effective_rate(const CouplingParameters& c,
                      const HamiltonianParameters& h) {
  if (h.delta_R == 0.0) {
    throw DomainError("delta_R must be nonzero when the rate is derived from coupling parameters");
  }
  if (!(c.volume > 0.0)) throw DomainError("bath volume must be positive");
  if (!(c.mu_R > 0.0)) throw DomainError("reduced mass mu_R must be positive");
  if (!(c.mode_sum >= 0.0)) throw DomainError("mode_sum must be non-negative");
  const double pi = std::numbers::pi;
  const double gamma = 2.0 * pi * pi * c.a_S * c.a_S * c.rho_C * c.mode_sum /
                       (c.volume * h.delta_R * c.mu_R * c.mu_R);
  if (!std::isfinite(gamma)) {
    throw DomainError("effective rate is not finite");
  }
  return gamma;
}

double ModelSpec::rate() const {
  if (coupling) return effective_rate(*coupling, hamiltonian);
  return gamma;
}

void ModelSpec::validate() const {
  (void)bond_list(topology);
  (void)space();
  const HamiltonianParameters& h = hamiltonian;
  for (double v : {h.J, h.U, h.delta_R, h.omega_R}) {
    if (!std::isfinite(v)) throw DomainError("Hamiltonian parameters must be finite");
  }
  if (!std::isfinite(rate())) throw DomainError("rate gamma must be finite");
}

OperatorMatrix build_free_hamiltonian(const ModelSpec& spec) {
  const FockSpace space = spec.space();
  const Convention conv = spec.convention;
  const HamiltonianParameters& p = spec.hamiltonian;
  const std::size_t n = space.n_sites();

  std::vector<OperatorMatrix> c(space.n_modes());
  std::vector<OperatorMatrix> cd(space.n_modes());
  for (std::size_t m = 0; m < space.n_modes(); ++m) {
    c[m] = space.annihilation_mode(m, conv);
    cd[m] = c[m].adjoint();
  }
  const auto mode = [&](std::size_t site, Spin s) { return space.mode_index(site, s); };
  const Spin spins[] = {Spin::Up, Spin::Down};

  OperatorMatrix h = OperatorMatrix::Zero(space.dim(), space.dim());
  for (const Bond& b : bond_list(spec.topology)) {
    for (Spin s : spins) {
      for (Spin sp : spins) {
        h -= p.J * (cd[mode(b.from, s)] * c[mode(b.to, sp)]);
        h -= p.J * (cd[mode(b.to, s)] * c[mode(b.from, sp)]);
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (Spin s : spins) {
      const std::size_t m = mode(j, s);
      // All four operators share one spin index, so c c = 0 kills the term.
      h += 0.5 * p.U * (cd[m] * cd[m] * c[m] * c[m]);
    }
    const std::size_t up = mode(j, Spin::Up);
    const std::size_t dn = mode(j, Spin::Down);
    h -= 0.5 * p.delta_R * (cd[up] * c[up] - cd[dn] * c[dn]);
    h += 0.5 * p.omega_R * (cd[up] * c[dn] + cd[dn] * c[up]);
  }
  return h;
}

}  // namespace fermibath
