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

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fermibath/config.hpp"
#include "fermibath/runner.hpp"
#include "fermibath/states.hpp"
#include "fermibath/validate.hpp"

namespace fs = std::filesystem;
using namespace fermibath;

namespace {

struct Overrides {
  std::string out;
  std::size_t workers = 1;
  bool store_states = false;
  std::string convention;
  std::string hermitize;
};

void apply(const Overrides& o, RunConfig& config) {
  if (!o.convention.empty()) apply_setting(config, "convention", o.convention);
  if (!o.hermitize.empty()) apply_setting(config, "hermitize", o.hermitize);
  if (o.store_states) config.trajectory.store_states = true;
  config.validate();
}

fs::path output_dir(const Overrides& o, const RunConfig& config) {
  if (!o.out.empty()) return o.out;
  return fs::path(config.out_dir) / config.name;
}

int cmd_run(const std::string& path, const Overrides& o) {
  RunConfig config = load_config(path);
  apply(o, config);
  const fs::path dir = output_dir(o, config);
  const RunResult result = run(config, dir);
  if (!result.ok) {
    std::fprintf(stderr, "run failed: %s (manifest in %s)\n", result.error.c_str(),
                 dir.string().c_str());
    return 1;
  }
  std::printf("%zu records, %zu steps, %.2fs -> %s\n", result.rows.size(),
              result.trajectory.diagnostics.steps, result.wall_seconds, dir.string().c_str());
  for (const std::string& w : result.warnings) std::printf("warning: %s\n", w.c_str());
  if (result.spin_exchange) {
    std::printf("spin exchange: %s (peak %.3e)\n",
                result.spin_exchange->declared ? "declared" : "none",
                result.spin_exchange->peak_value);
  }
  return 0;
}

int cmd_sweep(const std::string& path, const Overrides& o) {
  RunConfig config = load_config(path);
  apply(o, config);
  const fs::path dir = output_dir(o, config);
  const SweepResult result = sweep(config, dir, o.workers);
  std::size_t failed = 0;
  for (const SweepEntry& e : result.entries) {
    std::printf("%s  %s", e.point.id.c_str(), e.result.ok ? "ok    " : "FAILED");
    for (const auto& [key, value] : e.point.parameters) {
      std::printf("  %s=%s", key.c_str(), value.c_str());
    }
    if (!e.result.ok) {
      ++failed;
      std::printf("  (%s)", e.result.error.c_str());
    }
    std::printf("\n");
  }
  std::printf("%zu runs, %zu failed -> %s\n", result.entries.size(), failed,
              (dir / "index.csv").string().c_str());
  return failed == 0 ? 0 : 1;
}

int cmd_validate(const std::optional<std::string>& path, const Overrides& o) {
  RunConfig config = path ? load_config(*path) : RunConfig{};
  apply(o, config);
  const ValidationReport report = validate(config);
  report.print(std::cout);
  return report.ok() ? 0 : 1;
}

int cmd_states() {
  std::printf("initial states:\n");
  for (InitialState s : kInitialStates) {
    std::printf("  %-24s %s\n", std::string(to_string(s)).c_str(),
                std::string(describe(s)).c_str());
  }
  std::printf("final states:\n");
  for (FinalState s : kFinalStates) {
    std::printf("  %-24s %s\n", std::string(to_string(s)).c_str(),
                std::string(describe(s)).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermionic lattice coupled to a bosonic bath: master-equation runs"};
  app.set_version_flag("--version", std::string(code_version()));
  app.require_subcommand(1);

  Overrides o;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output directory");
    sub->add_option("--convention", o.convention, "Operator convention")
        ->check(CLI::IsMember({"jw", "local"}));
    sub->add_option("--hermitize", o.hermitize, "Project dρ/dt onto its Hermitian part")
        ->check(CLI::IsMember({"on", "off"}));
  };

  std::string config_path;
  std::optional<std::string> validate_path;

  CLI::App* run_cmd = app.add_subcommand("run", "Integrate one configuration");
  run_cmd->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
  add_common(run_cmd);
  run_cmd->add_flag("--store-states", o.store_states, "Write full density matrices");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run the Cartesian product of [sweep] lists");
  sweep_cmd->add_option("config", config_path, "Config file")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(sweep_cmd);
  sweep_cmd->add_flag("--store-states", o.store_states, "Write full density matrices");
  sweep_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);

  CLI::App* validate_cmd = app.add_subcommand("validate", "Run the invariant suite");
  validate_cmd->add_option("config", validate_path, "Config file")->check(CLI::ExistingFile);
  add_common(validate_cmd);

  CLI::App* states_cmd = app.add_subcommand("states", "Named states");
  states_cmd->add_subcommand("list", "List named initial and final states");
  states_cmd->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(config_path, o);
    if (*sweep_cmd) return cmd_sweep(config_path, o);
    if (*validate_cmd) return cmd_validate(validate_path, o);
    if (*states_cmd) return cmd_states();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
