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

#include "fermibath/observables.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace fermibath {

namespace {

void check_same_shape(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DomainError("observable operands have mismatched dimensions");
  }
}

double real_checked(Complex value, std::string_view what) {
  if (std::abs(value.imag()) > kObservableResidueTolerance) {
    throw ObservableError(std::string(what) + " has imaginary residue " +
                          std::to_string(value.imag()));
  }
  return value.real();
}

// Tr(A B) without forming the product.
Complex trace_of_product(const OperatorMatrix& a, const OperatorMatrix& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

}  // namespace

double fidelity(const OperatorMatrix& rho_f, const OperatorMatrix& rho_t) {
  check_same_shape(rho_f, rho_t);
  return real_checked(trace_of_product(rho_f, rho_t), "fidelity");
}

OccupationProjector occupation_projector(const FockSpace& space, std::size_t site) {
  const std::size_t up = space.mode_index(site, Spin::Up);
  const std::size_t dn = space.mode_index(site, Spin::Down);
  OccupationProjector p{site, OperatorMatrix::Zero(space.dim(), space.dim())};
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const FockState s = space.basis_state(i);
    if (s.occupied(up) || s.occupied(dn)) p.matrix(i, i) = 1.0;
  }
  return p;
}

double occupation_probability(const OccupationProjector& projector,
                              const OperatorMatrix& rho) {
  check_same_shape(projector.matrix, rho);
  Complex total = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    total += projector.matrix(i, i) * rho(i, i);
  }
  return real_checked(total, "occupation probability");
}

double purity(const OperatorMatrix& rho) {
  check_same_shape(rho, rho);
  return real_checked(trace_of_product(rho, rho), "purity");
}

double linear_entropy(const OperatorMatrix& rho) {
  const double d = static_cast<double>(rho.rows());
  if (d < 2.0) throw DomainError("linear entropy needs dimension at least 2");
  const double s = d / (d - 1.0) * (1.0 - purity(rho));
  const double excess = std::max(-s, s - 1.0);
  if (excess > kObservableResidueTolerance) {
    throw ObservableError("linear entropy " + std::to_string(s) +
                          " lies outside [0, 1]");
  }
  return std::clamp(s, 0.0, 1.0);
}

double min_eigenvalue(const OperatorMatrix& rho) {
  check_same_shape(rho, rho);
  const OperatorMatrix h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::string ObservableSpec::column() const {
  switch (kind) {
    case ObservableKind::Fidelity: return "F_" + std::string(to_string(target));
    case ObservableKind::Occupation: return "P_occ_" + std::to_string(site + 1);
    case ObservableKind::Entropy: return "S_L";
    case ObservableKind::Purity: return "purity";
    case ObservableKind::MinEigenvalue: return "min_eig";
    case ObservableKind::HermiticityDefect: return "hermiticity_defect";
  }
  return "?";
}

std::string ObservableSpec::name() const {
  switch (kind) {
    case ObservableKind::Fidelity: return "fidelity:" + std::string(to_string(target));
    case ObservableKind::Occupation: return "occupation:" + std::to_string(site + 1);
    case ObservableKind::Entropy: return "entropy";
    case ObservableKind::Purity: return "purity";
    case ObservableKind::MinEigenvalue: return "min_eig";
    case ObservableKind::HermiticityDefect: return "hermiticity_defect";
  }
  return "?";
}

ObservableSpec parse_observable(std::string_view text) {
  ObservableSpec spec;
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;

  if (head == "fidelity") {
    if (!has_arg) throw DomainError("fidelity observable needs a final state, e.g. fidelity:full");
    spec.kind = ObservableKind::Fidelity;
    spec.target = parse_final_state(arg);
    return spec;
  }
  if (head == "occupation") {
    std::size_t site = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), site);
    if (!has_arg || ec != std::errc() || ptr != arg.data() + arg.size() || site == 0) {
      throw DomainError("occupation observable needs a one-based site, e.g. occupation:1");
    }
    spec.kind = ObservableKind::Occupation;
    spec.site = site - 1;
    return spec;
  }
  if (has_arg) throw DomainError("observable '" + std::string(text) + "' takes no argument");
  if (head == "entropy") spec.kind = ObservableKind::Entropy;
  else if (head == "purity") spec.kind = ObservableKind::Purity;
  else if (head == "min_eig") spec.kind = ObservableKind::MinEigenvalue;
  else if (head == "hermiticity_defect") spec.kind = ObservableKind::HermiticityDefect;
  else throw DomainError("unknown observable '" + std::string(text) + "'");
  return spec;
}

std::vector<ObservableSpec> default_observables(std::size_t n_sites) {
  std::vector<ObservableSpec> out;
  for (FinalState f : kFinalStates) {
    out.push_back({ObservableKind::Fidelity, f, 0});
  }
  for (std::size_t site = 0; site < n_sites; ++site) {
    out.push_back({ObservableKind::Occupation, FinalState::Empty, site});
  }
  out.push_back({ObservableKind::Entropy, FinalState::Empty, 0});
  return out;
}

ObservableSet::ObservableSet(const FockSpace& space, std::vector<ObservableSpec> specs,
                             const Superoperator* generator, Convention conv)
    : specs_(std::move(specs)), generator_(generator) {
  for (const ObservableSpec& s : specs_) {
    switch (s.kind) {
      case ObservableKind::Fidelity:
        targets_.push_back(final_state(space, s.target, conv).matrix());
        break;
      case ObservableKind::Occupation:
        projectors_.push_back(occupation_projector(space, s.site));
        break;
      case ObservableKind::HermiticityDefect:
        if (generator_ == nullptr) {
          throw DomainError("hermiticity_defect observable needs a generator");
        }
        break;
      default:
        break;
    }
  }
}

std::vector<std::string> ObservableSet::header() const {
  std::vector<std::string> out;
  out.reserve(specs_.size());
  for (const ObservableSpec& s : specs_) out.push_back(s.column());
  return out;
}

std::vector<double> ObservableSet::evaluate(const OperatorMatrix& rho) const {
  std::vector<double> out;
  out.reserve(specs_.size());
  std::size_t next_target = 0;
  std::size_t next_projector = 0;
  for (const ObservableSpec& s : specs_) {
    switch (s.kind) {
      case ObservableKind::Fidelity:
        out.push_back(fidelity(targets_[next_target++], rho));
        break;
      case ObservableKind::Occupation:
        out.push_back(occupation_probability(projectors_[next_projector++], rho));
        break;
      case ObservableKind::Entropy:
        out.push_back(linear_entropy(rho));
        break;
      case ObservableKind::Purity:
        out.push_back(purity(rho));
        break;
      case ObservableKind::MinEigenvalue:
        out.push_back(min_eigenvalue(rho));
        break;
      case ObservableKind::HermiticityDefect:
        out.push_back(hermiticity_defect(*generator_, rho));
        break;
    }
  }
  return out;
}

SpinExchangeReport detect_spin_exchange(const std::vector<double>& times,
                                        const std::vector<double>& fidelity_up_down,
                                        const std::vector<double>& fidelity_down_up,
                                        double threshold) {
  if (times.size() != fidelity_up_down.size() || times.size() != fidelity_down_up.size()) {
    throw DomainError("spin-exchange series lengths differ");
  }
  const auto scan = [&](const std::vector<double>& series, FinalState target) {
    SpinExchangeReport r;
    r.target = target;
    if (series.empty()) return r;
    r.initial_value = series.front();
    r.peak_value = *std::max_element(series.begin(), series.end());
    const bool starts_at_zero = std::abs(series.front()) <= 1e-12;
    for (std::size_t k = 1; k < series.size(); ++k) {
      if (series[k] > threshold) {
        r.crossing_time = times[k];
        break;
      }
    }
    r.declared = starts_at_zero && r.crossing_time >= 0.0;
    return r;
  };
  SpinExchangeReport primary = scan(fidelity_up_down, FinalState::UpDown5050);
  if (primary.declared) return primary;
  SpinExchangeReport fallback = scan(fidelity_down_up, FinalState::DownUp5050);
  return fallback.declared ? fallback : primary;
}

}  // namespace fermibath
