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
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermibath/config.hpp"
#include "fermibath/dynamics.hpp"
#include "fermibath/observables.hpp"

namespace fermibath {

std::string_view code_version();

struct RunResult {
  bool ok = false;
  std::string error;
  double gamma = 0.0;
  // "time" followed by the observable columns.
  std::vector<std::string> header;
  // One row per recorded time: time, then observable values.
  std::vector<std::vector<double>> rows;
  Trajectory trajectory;
  // Present when both up-down-5050 and down-up-5050 fidelities are recorded.
  std::optional<SpinExchangeReport> spin_exchange;
  std::vector<std::string> warnings;
  double wall_seconds = 0.0;
};

// Builds the generator and integrates in memory. Failures are reported in
// the result rather than thrown.
RunResult execute(const RunConfig& config);

// execute() plus observables.csv, manifest.txt and, with store_states,
// states.csv under `dir`. The manifest is written even when the run fails.
RunResult run(const RunConfig& config, const std::filesystem::path& dir);

// One expanded point of a sweep.
struct SweepPoint {
  std::string id;  // run_0000, run_0001, ...
  std::vector<std::pair<std::string, std::string>> parameters;
  RunConfig config;
};

// Cartesian product over the [sweep] axes, first axis outermost. An empty
// sweep expands to the base config alone.
std::vector<SweepPoint> expand_sweep(const RunConfig& config);

struct SweepEntry {
  SweepPoint point;
  RunResult result;
};

struct SweepResult {
  std::vector<SweepEntry> entries;
  bool all_ok() const;
};

// Runs every point into dir/<id>/ on a pool of `workers` threads, finishing
// all runs even if some fail, then writes dir/index.csv.
SweepResult sweep(const RunConfig& config, const std::filesystem::path& dir,
                  std::size_t workers = 1);

void write_observables_csv(const RunResult& result, const std::filesystem::path& path);
void write_manifest(const RunConfig& config, const RunResult& result,
                    const std::filesystem::path& path);

}  // namespace fermibath
