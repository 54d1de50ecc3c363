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

#include <random>

#include "fermibath/reference.hpp"
#include "fermibath/superoperator.hpp"
#include "fermibath/validate.hpp"

using namespace fermibath;

namespace {

ModelSpec model(std::size_t n, bool closed, Convention conv, double gamma = 1.0) {
  ModelSpec spec;
  spec.topology = {n, closed};
  spec.convention = conv;
  spec.gamma = gamma;
  return spec;
}

double dense_diff(const SparseMatrix& a, const SparseMatrix& b) {
  const SparseMatrix d = a - b;
  double worst = 0.0;
  for (int k = 0; k < d.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(d, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

}  // namespace

TEST_CASE("vec identity for sandwich superoperators") {
  std::mt19937_64 rng(7);
  const OperatorMatrix x = random_matrix(8, rng), rho = random_matrix(8, rng),
                       y = random_matrix(8, rng);
  const SparseMatrix s = sandwich_superoperator(x.sparseView(), y.sparseView());
  const Vector lhs = s * vectorize(rho);
  CHECK(max_abs(devectorize(lhs, 8) - x * rho * y) < 1e-12);
  const OperatorMatrix back = devectorize(vectorize(rho), 8);
  CHECK(max_abs(back - rho) == 0.0);
}

TEST_CASE("generator matches direct nested commutators") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {2u, 3u}) {
    for (bool closed : {false, true}) {
      for (Convention conv : {Convention::JordanWigner, Convention::LocalPauli}) {
        const ModelSpec spec = model(n, closed, conv, 0.8);
        const Superoperator L = build_generator(spec);
        const reference::DirectGenerator direct(spec);
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
          const OperatorMatrix rho = random_hermitian(spec.space().dim(), rng);
          worst = std::max(worst, max_abs(L.apply(rho) - direct.apply(rho)));
        }
        CAPTURE(n);
        CAPTURE(closed);
        CHECK(worst <= 1e-12);
      }
    }
  }
}

TEST_CASE("generator with the unitary term matches the oracle") {
  std::mt19937_64 rng(12);
  ModelSpec spec = model(3, true, Convention::JordanWigner);
  spec.unitary = true;
  spec.hamiltonian = {0.9, 0.0, 1.1, 0.6};
  const Superoperator L = build_generator(spec);
  for (int k = 0; k < 5; ++k) {
    const OperatorMatrix rho = random_hermitian(64, rng);
    CHECK(max_abs(L.apply(rho) - reference::generator_action(spec, rho)) <= 1e-12);
  }
}

TEST_CASE("trace annihilation and linearity") {
  std::mt19937_64 rng(13);
  const Superoperator L = build_generator(model(3, false, Convention::JordanWigner));
  for (int k = 0; k < 100; ++k) {
    CHECK(std::abs(L.apply(random_matrix(64, rng)).trace()) <= 1e-12);
  }
  const OperatorMatrix a = random_matrix(64, rng), b = random_matrix(64, rng);
  const Complex alpha(1.5, -0.5), beta(-0.25, 2.0);
  CHECK(max_abs(L.apply(OperatorMatrix(alpha * a + beta * b)) -
                (alpha * L.apply(a) + beta * L.apply(b))) <= 1e-12);
}

TEST_CASE("gamma scaling is exact") {
  const FockSpace space(3);
  const auto bonds = bond_list({3, true});
  const Superoperator one = build_dissipator(space, bonds, 1.0, Convention::JordanWigner);
  const Superoperator three = build_dissipator(space, bonds, 3.0, Convention::JordanWigner);
  CHECK(dense_diff(three.matrix(), (one * Complex(3.0, 0.0)).matrix()) == 0.0);
  CHECK(build_dissipator(space, bonds, 0.0, Convention::JordanWigner).is_zero());
}

TEST_CASE("open chain is the closed chain without the wrap bond") {
  const FockSpace space(3);
  const HoppingOperators ops(space, Convention::JordanWigner);
  const auto closed_bonds = bond_list({3, true});
  const Bond wrap{2, 0};
  SparseMatrix wrap_terms(4096, 4096);
  for (const Bond& a : closed_bonds)
    for (const Bond& b : closed_bonds)
      if (a == wrap || b == wrap) wrap_terms += bond_pair_terms(ops, a, b);
  const double gamma = 1.3;
  const SparseMatrix closed =
      build_dissipator(space, closed_bonds, gamma, Convention::JordanWigner).matrix();
  const SparseMatrix open =
      build_dissipator(space, bond_list({3, false}), gamma, Convention::JordanWigner).matrix();
  const SparseMatrix trimmed = closed - SparseMatrix(Complex(0.0, -gamma) * wrap_terms);
  CHECK(dense_diff(trimmed, open) <= 1e-12);
}

TEST_CASE("maximally mixed state is stationary") {
  for (bool closed : {false, true}) {
    const Superoperator L = build_generator(model(3, closed, Convention::JordanWigner));
    const OperatorMatrix mixed = OperatorMatrix::Identity(64, 64) / 64.0;
    CHECK(max_abs(L.apply(mixed)) == 0.0);
    CHECK(hermiticity_defect(L, mixed) == 0.0);
  }
}

TEST_CASE("zero rate gives the zero superoperator") {
  const Superoperator L = build_generator(model(3, false, Convention::JordanWigner, 0.0));
  CHECK(L.is_zero());
  std::mt19937_64 rng(3);
  CHECK(hermiticity_defect(L, random_hermitian(64, rng)) == 0.0);
}

TEST_CASE("hermitized generator agrees with the Hermitian part on Hermitian input") {
  std::mt19937_64 rng(5);
  const Superoperator L = build_generator(model(2, false, Convention::JordanWigner));
  const Superoperator H = L.hermitized();
  const OperatorMatrix rho = random_hermitian(16, rng);
  const OperatorMatrix lr = L.apply(rho);
  CHECK(max_abs(H.apply(rho) - 0.5 * (lr + OperatorMatrix(lr.adjoint()))) <= 1e-13);
}
