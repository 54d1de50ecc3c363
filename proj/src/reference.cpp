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

#include "fermibath/reference.hpp"

#include <bit>

namespace fermibath::reference {

OperatorMatrix annihilation_by_action(const FockSpace& space, std::size_t mode,
                                      Convention conv) {
  if (mode >= space.n_modes()) throw DomainError("mode index out of range");
  const std::size_t dim = space.dim();
  OperatorMatrix c = OperatorMatrix::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const FockState in = space.basis_state(col);
    if (!in.occupied(mode)) continue;
    const FockState out = in.with(mode, false);
    double sign = 1.0;
    if (conv == Convention::JordanWigner) {
      const std::uint32_t below = in.bits() & ((std::uint32_t{1} << mode) - 1u);
      sign = (std::popcount(below) % 2 == 0) ? 1.0 : -1.0;
    }
    c(space.basis_index(out), col) = sign;
  }
  return c;
}

namespace {

OperatorMatrix comm(const SparseMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

OperatorMatrix comm(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a * b - b * a;
}

SparseMatrix dag(const SparseMatrix& a) { return a.adjoint(); }

}  // namespace

DirectGenerator::DirectGenerator(const FockSpace& space, std::vector<Bond> bonds,
                                 double gamma, Convention conv)
    : n_sites_(space.n_sites()), bonds_(std::move(bonds)), gamma_(gamma) {
  std::vector<OperatorMatrix> c(space.n_modes());
  for (std::size_t m = 0; m < space.n_modes(); ++m) {
    c[m] = annihilation_by_action(space, m, conv);
  }
  hops_.resize(n_sites_ * n_sites_ * 2);
  for (std::size_t from = 0; from < n_sites_; ++from) {
    for (std::size_t to = 0; to < n_sites_; ++to) {
      for (std::size_t s = 0; s < 2; ++s) {
        const OperatorMatrix h = c[2 * from + s].adjoint() * c[2 * to + s];
        hops_[(from * n_sites_ + to) * 2 + s] = h.sparseView();
      }
    }
  }
}

DirectGenerator::DirectGenerator(const ModelSpec& spec)
    : DirectGenerator(spec.space(), bond_list(spec.topology), spec.rate(),
                      spec.convention) {
  if (spec.unitary) hamiltonian_ = build_free_hamiltonian(spec);
}

SparseMatrix DirectGenerator::hop(std::size_t from, std::size_t to, Spin spin) const {
  return hops_[(from * n_sites_ + to) * 2 + static_cast<std::size_t>(spin)];
}

OperatorMatrix DirectGenerator::apply(const OperatorMatrix& rho) const {
  OperatorMatrix sum = OperatorMatrix::Zero(rho.rows(), rho.cols());
  for (const Bond& b : bonds_) {
    for (const Bond& bp : bonds_) {
      const SparseMatrix a_up = hop(bp.from, bp.to, Spin::Up);
      const SparseMatrix a_dn = hop(bp.from, bp.to, Spin::Down);
      const SparseMatrix b_up = hop(b.from, b.to, Spin::Up);
      const SparseMatrix b_dn = hop(b.from, b.to, Spin::Down);
      const SparseMatrix bt_up = hop(b.to, b.from, Spin::Up);
      const SparseMatrix bt_dn = hop(b.to, b.from, Spin::Down);

      const OperatorMatrix x1 = comm(a_dn, comm(b_up, rho)) - comm(a_up, comm(b_dn, rho));
      const OperatorMatrix x1h = comm(dag(a_dn), comm(dag(b_up), rho)) -
                                 comm(dag(a_up), comm(dag(b_dn), rho));
      const OperatorMatrix x2 = comm(a_dn, comm(bt_dn, rho)) - comm(a_up, comm(bt_up, rho));
      const OperatorMatrix x2h = comm(dag(a_dn), comm(dag(bt_dn), rho)) -
                                 comm(dag(a_up), comm(dag(bt_up), rho));
      sum += (x1 + x1h) + (x2 - x2h);
    }
  }
  OperatorMatrix out = (gamma_ / Complex(0.0, 1.0)) * sum;
  if (hamiltonian_.size() != 0) {
    out += Complex(0.0, -1.0) * comm(hamiltonian_, rho);
  }
  return out;
}

OperatorMatrix dissipator_action(const FockSpace& space,
                                 const std::vector<Bond>& bonds, double gamma,
                                 Convention conv, const OperatorMatrix& rho) {
  return DirectGenerator(space, bonds, gamma, conv).apply(rho);
}

OperatorMatrix generator_action(const ModelSpec& spec, const OperatorMatrix& rho) {
  return DirectGenerator(spec).apply(rho);
}

}  // namespace fermibath::reference
