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

#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fermibath/lattice.hpp"

using namespace fermibath;

TEST_CASE("bond lists") {
  using B = std::vector<Bond>;
  CHECK(bond_list({3, false}) == B{{0, 1}, {1, 2}});
  CHECK(bond_list({3, true}) == B{{0, 1}, {1, 2}, {2, 0}});
  CHECK(bond_list({2, false}) == B{{0, 1}});
  CHECK(bond_list({2, true}) == B{{0, 1}});
  CHECK(bond_list({4, true}).size() == 4);
  CHECK_THROWS_AS(bond_list({1, false}), DomainError);
}

TEST_CASE("effective rate") {
  CouplingParameters c;
  HamiltonianParameters h;
  h.delta_R = 2.0 * std::numbers::pi * std::numbers::pi;
  CHECK(effective_rate(c, h) == doctest::Approx(1.0).epsilon(1e-15));
  c.a_S = 2.0;
  CHECK(effective_rate(c, h) == doctest::Approx(4.0).epsilon(1e-15));
  c.mode_sum = 0.0;
  CHECK(effective_rate(c, h) == 0.0);
  c.mode_sum = 1.0;
  h.delta_R = 0.0;
  CHECK_THROWS_AS(effective_rate(c, h), DomainError);
  h.delta_R = 1.0;
  c.volume = 0.0;
  CHECK_THROWS(effective_rate(c, h));
}

TEST_CASE("model spec rate") {
  ModelSpec spec;
  spec.gamma = 0.25;
  CHECK(spec.rate() == 0.25);
  spec.coupling = CouplingParameters{};
  spec.hamiltonian.delta_R = 2.0;
  CHECK(spec.rate() == doctest::Approx(std::numbers::pi * std::numbers::pi));
}

TEST_CASE("free Hamiltonian is Hermitian") {
  ModelSpec spec;
  spec.hamiltonian = {0.7, 1.3, -0.4, 0.9};
  for (bool closed : {false, true}) {
    spec.topology.closed = closed;
    const OperatorMatrix h = build_free_hamiltonian(spec);
    CHECK(h.rows() == 64);
    CHECK(max_abs(h - OperatorMatrix(h.adjoint())) == 0.0);
    CHECK(max_abs(h) > 0.0);
  }
}

TEST_CASE("free Hamiltonian diagonal case") {
  ModelSpec spec;
  spec.hamiltonian = {0.0, 0.0, 2.0, 0.0};
  const FockSpace space = spec.space();
  const OperatorMatrix h = build_free_hamiltonian(spec);
  OperatorMatrix expected = OperatorMatrix::Zero(64, 64);
  for (std::size_t i = 0; i < 64; ++i) {
    const FockState s = space.basis_state(i);
    double e = 0.0;
    for (std::size_t site = 0; site < 3; ++site) {
      e -= double(s.occupied(2 * site)) - double(s.occupied(2 * site + 1));
    }
    expected(Eigen::Index(i), Eigen::Index(i)) = e;
  }
  CHECK(max_abs(h - expected) < 1e-15);
}

TEST_CASE("same-spin U term vanishes") {
  ModelSpec a, b;
  a.hamiltonian = {0.5, 0.0, 1.0, 0.3};
  b.hamiltonian = {0.5, 7.0, 1.0, 0.3};
  CHECK(max_abs(build_free_hamiltonian(a) - build_free_hamiltonian(b)) == 0.0);
}

TEST_CASE("model validation") {
  ModelSpec spec;
  spec.gamma = std::nan("");
  CHECK_THROWS(spec.validate());
  spec.gamma = 1.0;
  spec.topology.n_sites = 1;
  CHECK_THROWS(spec.validate());
}
