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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fermibath/dynamics.hpp"
#include "fermibath/lattice.hpp"
#include "fermibath/observables.hpp"
#include "fermibath/states.hpp"

namespace fermibath {

// One [sweep] entry: a config key and the values to iterate over.
struct SweepAxis {
  std::string key;
  std::vector<std::string> values;
};

struct RunConfig {
  ModelSpec model;
  TrajectoryConfig trajectory;

  // Named initial state, or "weights" when initial_weights is used.
  std::string initial = "empty";
  // Occupation bitstring (character m is n_m) and probability weight.
  std::vector<std::pair<std::string, double>> initial_weights;

  // Empty selects default_observables().
  std::vector<ObservableSpec> observables;

  std::string out_dir = "out";
  std::string name = "run";
  std::uint64_t seed = 20240917;
  double exchange_threshold = 0.01;

  std::vector<SweepAxis> sweep;

  DensityMatrix initial_state() const;
  std::vector<ObservableSpec> resolved_observables() const;
  // Throws ConfigError naming the offending key.
  void validate() const;
};

// Strict parse of the key = value format with optional [section] headers.
// Blank lines and '#' comments are ignored. Keys before any header resolve
// to the section that owns them. Unknown or duplicate keys, syntax errors
// and invalid values raise ConfigError with the line number and key path.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

// Sets one key (bare or section-qualified) from its textual value.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

// Effective configuration as ordered (section.key, value) pairs.
std::vector<std::pair<std::string, std::string>> describe(const RunConfig& config);

// Round-trip formatting used in manifests and CSV output.
std::string format_double(double value);

}  // namespace fermibath
