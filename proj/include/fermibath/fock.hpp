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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fermibath/types.hpp"

namespace fermibath {

enum class Spin : std::uint8_t { Up = 0, Down = 1 };

enum class Convention : std::uint8_t {
  // Kronecker product of sigma- with identities, exactly the per-site
  // matrices sigma-(x)I and I(x)sigma-. Does not anticommute across modes.
  LocalPauli,
  // Same local factor with a parity string on every lower-index mode.
  JordanWigner,
};

std::string_view to_string(Spin spin);
std::string_view to_string(Convention conv);
// Accepts "jw", "jordan-wigner", "local", "local-pauli".
Convention parse_convention(std::string_view text);

// Occupation bitstring over the 2N spin-modes; bit m holds n_m where
// m = 2*site + (0 for up, 1 for down).
class FockState {
 public:
  FockState() = default;
  explicit FockState(std::uint32_t occupation_bits) : bits_(occupation_bits) {}

  bool occupied(std::size_t mode) const { return (bits_ >> mode) & 1u; }
  FockState with(std::size_t mode, bool occupied) const;
  std::uint32_t bits() const { return bits_; }

  friend bool operator==(FockState, FockState) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Occupation-number space for `n_sites` sites with two spin-modes each.
//
// Column vectors follow the tensor order mode 0 (x) mode 1 (x) ... with an
// occupied mode mapped to (1,0)^T and an empty mode to (0,1)^T. For a single
// site this reproduces |1,1> = e0, |1,0> = e1, |0,1> = e2, |0,0> = e3.
class FockSpace {
 public:
  static constexpr std::size_t kDefaultMaxSites = 5;

  explicit FockSpace(std::size_t n_sites,
                     std::size_t max_sites = kDefaultMaxSites);

  std::size_t n_sites() const { return n_sites_; }
  std::size_t n_modes() const { return 2 * n_sites_; }
  std::size_t dim() const { return std::size_t{1} << n_modes(); }

  // Throws DomainError when site >= n_sites().
  std::size_t mode_index(std::size_t site, Spin spin) const;

  std::size_t basis_index(FockState state) const;
  FockState basis_state(std::size_t index) const;
  // Parses a bitstring such as "010000" (character m is n_m).
  FockState parse_state(std::string_view occupations) const;
  std::string format_state(FockState state) const;

  OperatorMatrix identity() const;
  OperatorMatrix annihilation(std::size_t site, Spin spin,
                              Convention conv = Convention::JordanWigner) const;
  OperatorMatrix creation(std::size_t site, Spin spin,
                          Convention conv = Convention::JordanWigner) const;
  OperatorMatrix number(std::size_t site, Spin spin,
                        Convention conv = Convention::JordanWigner) const;

  // Mode-indexed variants; mode < n_modes().
  OperatorMatrix annihilation_mode(std::size_t mode, Convention conv) const;
  OperatorMatrix creation_mode(std::size_t mode, Convention conv) const;

 private:
  void check_mode(std::size_t mode) const;

  std::size_t n_sites_;
};

struct ModePairDeviation {
  std::size_t mode_a = 0;
  std::size_t mode_b = 0;
  bool same_site = false;
  double annihilators = 0.0;  // |{c_a, c_b}|_max
  double creators = 0.0;      // |{c_a^dag, c_b^dag}|_max
  double mixed = 0.0;         // |{c_a, c_b^dag} - delta_ab I|_max
};

struct AnticommutatorReport {
  Convention convention = Convention::JordanWigner;
  std::size_t pairs_checked = 0;
  double max_annihilators = 0.0;
  double max_creators = 0.0;
  double max_mixed = 0.0;
  // Pairs with any nonzero deviation, in (a, b) order.
  std::vector<ModePairDeviation> violations;

  double max_deviation() const;
  bool holds() const { return violations.empty(); }
};

// Brute-force anticommutators over all ordered mode pairs.
AnticommutatorReport verify_anticommutators(const FockSpace& space,
                                            Convention conv);

}  // namespace fermibath
