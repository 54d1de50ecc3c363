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

#include "fermibath/fock.hpp"

#include <algorithm>
#include <cctype>
#include <unsupported/Eigen/KroneckerProduct>

namespace fermibath {

namespace {

Eigen::Matrix2cd sigma_minus() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(1, 0) = 1.0;
  return m;
}

// (-1)^n in the occupied=(1,0)^T orientation.
Eigen::Matrix2cd parity() {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view to_string(Spin spin) {
  return spin == Spin::Up ? "up" : "down";
}

std::string_view to_string(Convention conv) {
  return conv == Convention::JordanWigner ? "jw" : "local";
}

Convention parse_convention(std::string_view text) {
  const std::string t = lower(text);
  if (t == "jw" || t == "jordan-wigner" || t == "jordanwigner") {
    return Convention::JordanWigner;
  }
  if (t == "local" || t == "local-pauli" || t == "localpauli") {
    return Convention::LocalPauli;
  }
  throw DomainError("unknown operator convention '" + std::string(text) +
                    "' (expected jw or local)");
}

FockState FockState::with(std::size_t mode, bool occupied) const {
  const std::uint32_t mask = std::uint32_t{1} << mode;
  return FockState(occupied ? (bits_ | mask) : (bits_ & ~mask));
}

FockSpace::FockSpace(std::size_t n_sites, std::size_t max_sites)
    : n_sites_(n_sites) {
  if (n_sites == 0) {
    throw DomainError("lattice needs at least one site");
  }
  if (n_sites > max_sites) {
    throw DomainError("lattice size " + std::to_string(n_sites) +
                      " exceeds the configured cap of " +
                      std::to_string(max_sites) + " sites");
  }
}

void FockSpace::check_mode(std::size_t mode) const {
  if (mode >= n_modes()) {
    throw DomainError("mode index " + std::to_string(mode) +
                      " out of range for " + std::to_string(n_sites_) +
                      " sites");
  }
}

std::size_t FockSpace::mode_index(std::size_t site, Spin spin) const {
  if (site >= n_sites_) {
    throw DomainError("site index " + std::to_string(site) +
                      " out of range for " + std::to_string(n_sites_) +
                      " sites");
  }
  return 2 * site + static_cast<std::size_t>(spin);
}

std::size_t FockSpace::basis_index(FockState state) const {
  const std::size_t m = n_modes();
  if (m < 32 && (state.bits() >> m) != 0) {
    throw DomainError("occupation bits beyond the last mode");
  }
  std::size_t index = 0;
  for (std::size_t mode = 0; mode < m; ++mode) {
    index = (index << 1) | (state.occupied(mode) ? 0u : 1u);
  }
  return index;
}

FockState FockSpace::basis_state(std::size_t index) const {
  if (index >= dim()) {
    throw DomainError("basis index " + std::to_string(index) +
                      " out of range");
  }
  const std::size_t m = n_modes();
  std::uint32_t bits = 0;
  for (std::size_t mode = 0; mode < m; ++mode) {
    const bool empty = (index >> (m - 1 - mode)) & 1u;
    if (!empty) bits |= std::uint32_t{1} << mode;
  }
  return FockState(bits);
}

FockState FockSpace::parse_state(std::string_view occupations) const {
  if (occupations.size() != n_modes()) {
    throw DomainError("occupation string '" + std::string(occupations) +
                      "' must have " + std::to_string(n_modes()) +
                      " characters");
  }
  FockState state;
  for (std::size_t mode = 0; mode < occupations.size(); ++mode) {
    const char c = occupations[mode];
    if (c != '0' && c != '1') {
      throw DomainError("occupation string '" + std::string(occupations) +
                        "' may only contain 0 and 1");
    }
    state = state.with(mode, c == '1');
  }
  return state;
}

std::string FockSpace::format_state(FockState state) const {
  std::string out(n_modes(), '0');
  for (std::size_t mode = 0; mode < n_modes(); ++mode) {
    if (state.occupied(mode)) out[mode] = '1';
  }
  return out;
}

OperatorMatrix FockSpace::identity() const {
  return OperatorMatrix::Identity(dim(), dim());
}

OperatorMatrix FockSpace::annihilation_mode(std::size_t mode,
                                            Convention conv) const {
  check_mode(mode);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  OperatorMatrix out = OperatorMatrix::Identity(1, 1);
  for (std::size_t k = 0; k < n_modes(); ++k) {
    Eigen::Matrix2cd factor = id;
    if (k == mode) {
      factor = sigma_minus();
    } else if (k < mode && conv == Convention::JordanWigner) {
      factor = parity();
    }
    OperatorMatrix next = Eigen::kroneckerProduct(out, factor).eval();
    out.swap(next);
  }
  return out;
}

OperatorMatrix FockSpace::creation_mode(std::size_t mode,
                                        Convention conv) const {
  return annihilation_mode(mode, conv).adjoint();
}

OperatorMatrix FockSpace::annihilation(std::size_t site, Spin spin,
                                       Convention conv) const {
  return annihilation_mode(mode_index(site, spin), conv);
}

OperatorMatrix FockSpace::creation(std::size_t site, Spin spin,
                                   Convention conv) const {
  return creation_mode(mode_index(site, spin), conv);
}

OperatorMatrix FockSpace::number(std::size_t site, Spin spin,
                                 Convention conv) const {
  const std::size_t mode = mode_index(site, spin);
  return creation_mode(mode, conv) * annihilation_mode(mode, conv);
}

double AnticommutatorReport::max_deviation() const {
  return std::max({max_annihilators, max_creators, max_mixed});
}

AnticommutatorReport verify_anticommutators(const FockSpace& space,
                                            Convention conv) {
  const std::size_t m = space.n_modes();
  std::vector<OperatorMatrix> c;
  std::vector<OperatorMatrix> cd;
  c.reserve(m);
  cd.reserve(m);
  for (std::size_t mode = 0; mode < m; ++mode) {
    c.push_back(space.annihilation_mode(mode, conv));
    cd.push_back(c.back().adjoint());
  }
  const OperatorMatrix id = space.identity();

  AnticommutatorReport report;
  report.convention = conv;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      ModePairDeviation dev;
      dev.mode_a = a;
      dev.mode_b = b;
      dev.same_site = (a / 2) == (b / 2);
      dev.annihilators = max_abs(c[a] * c[b] + c[b] * c[a]);
      dev.creators = max_abs(cd[a] * cd[b] + cd[b] * cd[a]);
      OperatorMatrix mixed = c[a] * cd[b] + cd[b] * c[a];
      if (a == b) mixed -= id;
      dev.mixed = max_abs(mixed);

      report.max_annihilators = std::max(report.max_annihilators, dev.annihilators);
      report.max_creators = std::max(report.max_creators, dev.creators);
      report.max_mixed = std::max(report.max_mixed, dev.mixed);
      ++report.pairs_checked;
      if (dev.annihilators != 0.0 || dev.creators != 0.0 || dev.mixed != 0.0) {
        report.violations.push_back(dev);
      }
    }
  }
  return report;
}

}  // namespace fermibath
