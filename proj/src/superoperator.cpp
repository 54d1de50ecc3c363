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

#include "fermibath/superoperator.hpp"

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace fermibath {

namespace {

SparseMatrix sparse_identity(std::size_t n) {
  SparseMatrix id(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  id.setIdentity();
  return id;
}

void drop_exact_zeros(SparseMatrix& m) {
  m.prune([](Eigen::Index, Eigen::Index, const Complex& v) {
    return v != Complex(0.0, 0.0);
  });
}

SparseMatrix nested(const SparseMatrix& outer, const SparseMatrix& inner) {
  return (commutator_superoperator(outer) * commutator_superoperator(inner)).pruned();
}

SparseMatrix adjoint(const SparseMatrix& m) { return m.adjoint(); }

}  // namespace

Superoperator::Superoperator(std::size_t state_dim, SparseMatrix matrix)
    : state_dim_(state_dim), matrix_(std::move(matrix)) {
  const auto n2 = static_cast<Eigen::Index>(state_dim * state_dim);
  if (matrix_.rows() != n2 || matrix_.cols() != n2) {
    throw DomainError("superoperator dimension does not match state dimension " +
                      std::to_string(state_dim));
  }
  matrix_.makeCompressed();
}

Superoperator Superoperator::zero(std::size_t state_dim) {
  const auto n2 = static_cast<Eigen::Index>(state_dim * state_dim);
  return Superoperator(state_dim, SparseMatrix(n2, n2));
}

OperatorMatrix Superoperator::apply(const OperatorMatrix& rho) const {
  if (static_cast<std::size_t>(rho.rows()) != state_dim_ ||
      static_cast<std::size_t>(rho.cols()) != state_dim_) {
    throw DomainError("density matrix dimension does not match superoperator");
  }
  return devectorize(apply(vectorize(rho)), state_dim_);
}

Vector Superoperator::apply(const Vector& vec_rho) const {
  if (vec_rho.size() != matrix_.cols()) {
    throw DomainError("vector length does not match superoperator");
  }
  Vector out = matrix_ * vec_rho;
  return out;
}

OperatorMatrix Superoperator::dense() const { return OperatorMatrix(matrix_); }

Superoperator Superoperator::hermitized() const {
  const std::size_t n = state_dim_;
  // vec(rho^dag) = P conj(vec rho) with P the index swap i + j n <-> j + i n.
  const auto swap = [n](Eigen::Index k) {
    const auto i = static_cast<std::size_t>(k) % n;
    const auto j = static_cast<std::size_t>(k) / n;
    return static_cast<Eigen::Index>(j + i * n);
  };
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(2 * nonzeros());
  for (Eigen::Index col = 0; col < matrix_.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(matrix_, col); it; ++it) {
      triplets.emplace_back(it.row(), it.col(), 0.5 * it.value());
      triplets.emplace_back(swap(it.row()), swap(it.col()), 0.5 * std::conj(it.value()));
    }
  }
  SparseMatrix out(matrix_.rows(), matrix_.cols());
  out.setFromTriplets(triplets.begin(), triplets.end());
  drop_exact_zeros(out);
  return Superoperator(n, std::move(out));
}

Superoperator Superoperator::operator+(const Superoperator& other) const {
  if (other.state_dim_ != state_dim_) throw DomainError("superoperator dimension mismatch");
  SparseMatrix sum = matrix_ + other.matrix_;
  drop_exact_zeros(sum);
  return Superoperator(state_dim_, std::move(sum));
}

Superoperator Superoperator::operator-(const Superoperator& other) const {
  return *this + other * Complex(-1.0, 0.0);
}

Superoperator Superoperator::operator*(Complex scale) const {
  SparseMatrix scaled = matrix_ * scale;
  drop_exact_zeros(scaled);
  return Superoperator(state_dim_, std::move(scaled));
}

SparseMatrix sandwich_superoperator(const SparseMatrix& left,
                                    const SparseMatrix& right) {
  SparseMatrix rt = right.transpose();
  SparseMatrix out = Eigen::kroneckerProduct(rt, left);
  return out;
}

SparseMatrix commutator_superoperator(const SparseMatrix& a) {
  const SparseMatrix id = sparse_identity(static_cast<std::size_t>(a.rows()));
  SparseMatrix out = sandwich_superoperator(a, id) - sandwich_superoperator(id, a);
  drop_exact_zeros(out);
  return out;
}

HoppingOperators::HoppingOperators(const FockSpace& space, Convention conv)
    : n_sites_(space.n_sites()), dim_(space.dim()) {
  std::vector<OperatorMatrix> c(space.n_modes());
  for (std::size_t m = 0; m < space.n_modes(); ++m) {
    c[m] = space.annihilation_mode(m, conv);
  }
  hops_.resize(n_sites_ * n_sites_ * 2);
  for (std::size_t from = 0; from < n_sites_; ++from) {
    for (std::size_t to = 0; to < n_sites_; ++to) {
      for (Spin s : {Spin::Up, Spin::Down}) {
        const OperatorMatrix h =
            c[space.mode_index(from, s)].adjoint() * c[space.mode_index(to, s)];
        SparseMatrix sparse = h.sparseView();
        drop_exact_zeros(sparse);
        hops_[(from * n_sites_ + to) * 2 + static_cast<std::size_t>(s)] = std::move(sparse);
      }
    }
  }
}

const SparseMatrix& HoppingOperators::hop(std::size_t from, std::size_t to,
                                          Spin spin) const {
  if (from >= n_sites_ || to >= n_sites_) {
    throw DomainError("hopping operator site out of range");
  }
  return hops_[(from * n_sites_ + to) * 2 + static_cast<std::size_t>(spin)];
}

SparseMatrix bond_pair_terms(const HoppingOperators& ops, const Bond& unprimed,
                             const Bond& primed) {
  const SparseMatrix& a_up = ops.hop(primed.from, primed.to, Spin::Up);
  const SparseMatrix& a_dn = ops.hop(primed.from, primed.to, Spin::Down);
  const SparseMatrix& b_up = ops.hop(unprimed.from, unprimed.to, Spin::Up);
  const SparseMatrix& b_dn = ops.hop(unprimed.from, unprimed.to, Spin::Down);
  const SparseMatrix& bt_up = ops.hop(unprimed.to, unprimed.from, Spin::Up);
  const SparseMatrix& bt_dn = ops.hop(unprimed.to, unprimed.from, Spin::Down);

  SparseMatrix total = nested(a_dn, b_up) - nested(a_up, b_dn);
  total += nested(adjoint(a_dn), adjoint(b_up)) - nested(adjoint(a_up), adjoint(b_dn));
  total += nested(a_dn, bt_dn) - nested(a_up, bt_up);
  total -= nested(adjoint(a_dn), adjoint(bt_dn)) - nested(adjoint(a_up), adjoint(bt_up));
  drop_exact_zeros(total);
  return total;
}

Superoperator build_dissipator(const FockSpace& space,
                               const std::vector<Bond>& bonds, double gamma,
                               Convention conv) {
  if (!std::isfinite(gamma)) {
    throw DomainError("rate gamma must be finite");
  }
  const std::size_t n = space.dim();
  const auto n2 = static_cast<Eigen::Index>(n * n);
  if (gamma == 0.0) return Superoperator::zero(n);

  const HoppingOperators ops(space, conv);
  SparseMatrix sum(n2, n2);
  for (const Bond& unprimed : bonds) {
    for (const Bond& primed : bonds) {
      sum += bond_pair_terms(ops, unprimed, primed);
    }
  }
  drop_exact_zeros(sum);
  // gamma / i
  return Superoperator(n, std::move(sum)) * Complex(0.0, -gamma);
}

Superoperator unitary_superoperator(const OperatorMatrix& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw DomainError("Hamiltonian must be square");
  }
  SparseMatrix h = hamiltonian.sparseView();
  drop_exact_zeros(h);
  return Superoperator(static_cast<std::size_t>(hamiltonian.rows()),
                       commutator_superoperator(h)) *
         Complex(0.0, -1.0);
}

Superoperator build_generator(const ModelSpec& spec) {
  spec.validate();
  const FockSpace space = spec.space();
  Superoperator generator =
      build_dissipator(space, bond_list(spec.topology), spec.rate(), spec.convention);
  if (spec.unitary) {
    generator = generator + unitary_superoperator(build_free_hamiltonian(spec));
  }
  return generator;
}

double hermiticity_defect(const Superoperator& generator,
                          const OperatorMatrix& rho) {
  const OperatorMatrix d = generator.apply(rho);
  return max_abs(d - d.adjoint());
}

}  // namespace fermibath
