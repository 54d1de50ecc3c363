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

#include "fermibath/fock.hpp"
#include "fermibath/reference.hpp"

using namespace fermibath;

namespace {

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

TEST_CASE("mode index is site-major, spin-minor") {
  const FockSpace space(3);
  CHECK(space.mode_index(0, Spin::Up) == 0);
  CHECK(space.mode_index(2, Spin::Down) == 5);
  CHECK(space.mode_index(1, Spin::Up) == 2);
  CHECK_THROWS_AS(space.mode_index(3, Spin::Up), DomainError);
  CHECK(space.n_modes() == 6);
  CHECK(space.dim() == 64);
}

TEST_CASE("site cap") {
  CHECK_THROWS(FockSpace(6));
  CHECK_NOTHROW(FockSpace(6, 6));
  CHECK_THROWS(FockSpace(0));
}

TEST_CASE("basis states round-trip") {
  const FockSpace space(3);
  for (std::size_t i = 0; i < space.dim(); ++i) {
    CHECK(space.basis_index(space.basis_state(i)) == i);
  }
  const FockState s = space.parse_state("010001");
  CHECK(s.occupied(1));
  CHECK(s.occupied(5));
  CHECK_FALSE(s.occupied(0));
  CHECK(space.format_state(s) == "010001");
  CHECK(space.basis_index(space.parse_state("000000")) == 63);
  CHECK(space.basis_index(space.parse_state("111111")) == 0);
  CHECK_THROWS(space.parse_state("0100"));
  CHECK_THROWS(space.parse_state("01000x"));
}

TEST_CASE("single-site local operators are the sigma-minus Kronecker factors") {
  const FockSpace space(1);
  OperatorMatrix sm(2, 2), id = OperatorMatrix::Identity(2, 2);
  sm << 0, 0, 1, 0;
  CHECK(max_abs(space.annihilation(0, Spin::Up, Convention::LocalPauli) - kron(sm, id)) == 0.0);
  CHECK(max_abs(space.annihilation(0, Spin::Down, Convention::LocalPauli) - kron(id, sm)) == 0.0);

  OperatorMatrix expected_up = OperatorMatrix::Zero(4, 4);
  expected_up(2, 0) = 1;
  expected_up(3, 1) = 1;
  CHECK(max_abs(space.annihilation(0, Spin::Up, Convention::LocalPauli) - expected_up) == 0.0);
}

TEST_CASE("operator algebra per mode") {
  const FockSpace space(3);
  for (Convention conv : {Convention::JordanWigner, Convention::LocalPauli}) {
    for (std::size_t site = 0; site < 3; ++site) {
      for (Spin spin : {Spin::Up, Spin::Down}) {
        const OperatorMatrix c = space.annihilation(site, spin, conv);
        const OperatorMatrix cd = space.creation(site, spin, conv);
        CHECK(max_abs(c * c) == 0.0);
        CHECK(max_abs(cd * cd) == 0.0);
        CHECK(max_abs(OperatorMatrix(cd.adjoint()) - c) == 0.0);
        const OperatorMatrix n = space.number(site, spin, conv);
        CHECK(max_abs(n * n - n) == 0.0);
        CHECK(n.trace().real() == doctest::Approx(32.0));
        CHECK(max_abs(n - space.number(site, spin, Convention::LocalPauli)) == 0.0);
      }
    }
  }
}

TEST_CASE("creation on the vacuum gives a unit vector") {
  const FockSpace space(3);
  Vector vac = Vector::Zero(64);
  vac(static_cast<Eigen::Index>(space.basis_index(FockState{}))) = 1.0;
  for (std::size_t m = 0; m < 6; ++m) {
    const Vector v = space.creation_mode(m, Convention::JordanWigner) * vac;
    CHECK(v.norm() == doctest::Approx(1.0));
    CHECK(std::abs(v(static_cast<Eigen::Index>(space.basis_index(FockState{}.with(m, true))))) ==
          doctest::Approx(1.0));
  }
}

TEST_CASE("Jordan-Wigner anticommutators hold exactly at N=3") {
  const AnticommutatorReport r = verify_anticommutators(FockSpace(3), Convention::JordanWigner);
  CHECK(r.pairs_checked == 36);
  CHECK(r.holds());
  CHECK(r.max_deviation() == 0.0);
}

TEST_CASE("local convention breaks only cross-site relations") {
  const AnticommutatorReport r = verify_anticommutators(FockSpace(3), Convention::LocalPauli);
  CHECK_FALSE(r.holds());
  bool same_site_violated = false;
  for (const ModePairDeviation& d : r.violations) {
    if (d.mode_a / 2 == d.mode_b / 2 && d.mode_a == d.mode_b) same_site_violated = true;
  }
  CHECK_FALSE(same_site_violated);
  // {c_a, c_b} = 2 c_a c_b for commuting distinct-site operators.
  const FockSpace space(3);
  const OperatorMatrix a = space.annihilation(0, Spin::Up, Convention::LocalPauli);
  const OperatorMatrix b = space.annihilation(1, Spin::Down, Convention::LocalPauli);
  CHECK(max_abs(a * b + b * a - 2.0 * a * b) == 0.0);
  CHECK(max_abs(a * b) > 0.0);
}

TEST_CASE("Kronecker construction matches the bit-action oracle") {
  for (std::size_t n : {1u, 2u, 3u}) {
    const FockSpace space(n);
    for (Convention conv : {Convention::JordanWigner, Convention::LocalPauli}) {
      for (std::size_t m = 0; m < space.n_modes(); ++m) {
        CHECK(max_abs(space.annihilation_mode(m, conv) -
                      reference::annihilation_by_action(space, m, conv)) == 0.0);
      }
    }
  }
}

TEST_CASE("convention names") {
  CHECK(parse_convention("jw") == Convention::JordanWigner);
  CHECK(parse_convention("local") == Convention::LocalPauli);
  CHECK_THROWS(parse_convention("majorana"));
}
