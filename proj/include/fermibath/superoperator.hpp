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
#include <vector>

#include "fermibath/lattice.hpp"
#include "fermibath/types.hpp"
#include "fermibath/vectorize.hpp"

namespace fermibath {

// Linear map on density matrices, stored as a sparse (n^2 x n^2) matrix
// acting on column-stacked vec(rho).
class Superoperator {
 public:
  Superoperator() = default;
  Superoperator(std::size_t state_dim, SparseMatrix matrix);

  static Superoperator zero(std::size_t state_dim);

  std::size_t state_dim() const { return state_dim_; }
  const SparseMatrix& matrix() const { return matrix_; }
  std::size_t nonzeros() const { return static_cast<std::size_t>(matrix_.nonZeros()); }
  bool is_zero() const { return matrix_.nonZeros() == 0; }

  OperatorMatrix apply(const OperatorMatrix& rho) const;
  Vector apply(const Vector& vec_rho) const;

  // Materialises the dense (n^2 x n^2) matrix; 268 MB at N = 3.
  OperatorMatrix dense() const;

  // L_h(rho) = (L(rho) + L(rho^dag)^dag) / 2. Complex-linear, and equal to
  // the Hermitian part of L(rho) whenever rho is Hermitian.
  Superoperator hermitized() const;

  Superoperator operator+(const Superoperator& other) const;
  Superoperator operator-(const Superoperator& other) const;
  Superoperator operator*(Complex scale) const;

 private:
  std::size_t state_dim_ = 0;
  SparseMatrix matrix_;
};

// vec(X rho Y) = (Y^T (x) X) vec(rho).
SparseMatrix sandwich_superoperator(const SparseMatrix& left,
                                    const SparseMatrix& right);
// vec([A, rho]) = (I (x) A - A^T (x) I) vec(rho).
SparseMatrix commutator_superoperator(const SparseMatrix& a);

// Same-spin hopping operators c+_{from,s} c_{to,s} for every spin.
class HoppingOperators {
 public:
  HoppingOperators(const FockSpace& space, Convention conv);

  const SparseMatrix& hop(std::size_t from, std::size_t to, Spin spin) const;
  std::size_t dim() const { return dim_; }

 private:
  std::size_t n_sites_;
  std::size_t dim_;
  std::vector<SparseMatrix> hops_;
};

// Sum of the eight nested commutators contributed by one (unprimed, primed)
// bond pair, without the gamma/i prefactor. With A_s from the primed bond
// (l', l'+r'), B_s = c+_{l,s} c_{l+r,s} and Bt_s = c+_{l+r,s} c_{l,s}:
//   [A_dn,[B_up,.]] - [A_up,[B_dn,.]] + h.c.
// + [A_dn,[Bt_dn,.]] - [A_up,[Bt_up,.]] - h.c.
// where h.c. of [X,[Y,.]] is the linear map [X^dag,[Y^dag,.]].
SparseMatrix bond_pair_terms(const HoppingOperators& ops, const Bond& unprimed,
                             const Bond& primed);

// Dissipative generator (gamma/i) * sum over independent bond pairs.
Superoperator build_dissipator(const FockSpace& space,
                               const std::vector<Bond>& bonds, double gamma,
                               Convention conv);

// -i[H, rho].
Superoperator unitary_superoperator(const OperatorMatrix& hamiltonian);

// Full generator for a model: the dissipator, plus -i[H0, .] when
// spec.unitary is set.
Superoperator build_generator(const ModelSpec& spec);

// max |L(rho) - L(rho)^dag|.
double hermiticity_defect(const Superoperator& generator,
                          const OperatorMatrix& rho);

}  // namespace fermibath
