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

#include "fermibath/runner.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <thread>

#include "fermibath/csv.hpp"
#include "fermibath/superoperator.hpp"

#ifndef FERMIBATH_VERSION
#define FERMIBATH_VERSION "dev"
#endif

namespace fermibath {

namespace {

namespace fs = std::filesystem;

void write_atomically(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw Error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

std::optional<std::size_t> column_of(const std::vector<ObservableSpec>& specs, FinalState f) {
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].kind == ObservableKind::Fidelity && specs[i].target == f) return i;
  }
  return std::nullopt;
}

void write_states_csv(const RunResult& result, const fs::path& path) {
  std::ostringstream out;
  csv::write_row(out, {"time", "row", "col", "re", "im"});
  const auto& states = result.trajectory.states;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const std::string t = csv::format_number(result.trajectory.times[k]);
    const OperatorMatrix& rho = states[k];
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
      for (Eigen::Index j = 0; j < rho.cols(); ++j) {
        csv::write_row(out, {t, std::to_string(i), std::to_string(j),
                             csv::format_number(rho(i, j).real()),
                             csv::format_number(rho(i, j).imag())});
      }
    }
  }
  write_atomically(path, out.str());
}

}  // namespace

std::string_view code_version() { return FERMIBATH_VERSION; }

RunResult execute(const RunConfig& config) {
  RunResult result;
  const auto start = std::chrono::steady_clock::now();
  try {
    config.validate();
    const FockSpace space = config.model.space();
    result.gamma = config.model.rate();
    const Superoperator generator = build_generator(config.model);
    const DensityMatrix rho0 = config.initial_state();
    const std::vector<ObservableSpec> specs = config.resolved_observables();
    const ObservableSet observables(space, specs, &generator, config.model.convention);

    result.header.push_back("time");
    for (const std::string& h : observables.header()) result.header.push_back(h);

    result.trajectory = evolve(generator, rho0, config.trajectory,
                               [&](double t, const OperatorMatrix& rho) {
                                 std::vector<double> row{t};
                                 for (double v : observables.evaluate(rho)) row.push_back(v);
                                 result.rows.push_back(std::move(row));
                               });

    const auto up_down = column_of(specs, FinalState::UpDown5050);
    const auto down_up = column_of(specs, FinalState::DownUp5050);
    if (up_down && down_up) {
      std::vector<double> f6, f5;
      for (const auto& row : result.rows) {
        f6.push_back(row[*up_down + 1]);
        f5.push_back(row[*down_up + 1]);
      }
      result.spin_exchange = detect_spin_exchange(result.trajectory.times, f6, f5,
                                                  config.exchange_threshold);
    }

    const EvolutionDiagnostics& d = result.trajectory.diagnostics;
    if (d.positivity_flag) {
      result.warnings.push_back("positivity: min eigenvalue " + format_double(d.min_eigenvalue) +
                                " at t = " + format_double(d.min_eigenvalue_time));
    }
    if (d.max_hermiticity_defect > 1e-12) {
      result.warnings.push_back("hermiticity: raw generator defect " +
                                format_double(d.max_hermiticity_defect) +
                                (config.trajectory.hermitize ? " (projected out)" : ""));
    }
    result.ok = true;
  } catch (const std::exception& e) {
    result.ok = false;
    result.error = e.what();
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void write_observables_csv(const RunResult& result, const fs::path& path) {
  std::ostringstream out;
  csv::write_row(out, result.header);
  for (const auto& row : result.rows) {
    std::vector<std::string> fields;
    fields.reserve(row.size());
    for (double v : row) fields.push_back(csv::format_number(v));
    csv::write_row(out, fields);
  }
  write_atomically(path, out.str());
}

void write_manifest(const RunConfig& config, const RunResult& result, const fs::path& path) {
  std::ostringstream out;
  const auto line = [&](std::string_view key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  const EvolutionDiagnostics& d = result.trajectory.diagnostics;
  line("status", result.ok ? "ok" : "failed");
  line("error", result.error);
  line("code_version", std::string(code_version()));
  line("convention", std::string(to_string(config.model.convention)));
  line("gamma", format_double(result.gamma));
  line("hermitize", config.trajectory.hermitize ? "on" : "off");
  line("steps", std::to_string(d.steps));
  line("records", std::to_string(result.rows.size()));
  line("max_trace_deviation", format_double(d.max_trace_deviation));
  line("max_hermiticity_defect", format_double(d.max_hermiticity_defect));
  line("min_eigenvalue", result.rows.empty() ? "" : format_double(d.min_eigenvalue));
  line("positivity_flag", d.positivity_flag ? "true" : "false");
  if (result.spin_exchange) {
    const SpinExchangeReport& s = *result.spin_exchange;
    line("spin_exchange", s.declared ? "declared" : "none");
    line("spin_exchange_target", std::string(to_string(s.target)));
    line("spin_exchange_initial", format_double(s.initial_value));
    line("spin_exchange_peak", format_double(s.peak_value));
  }
  std::string warnings;
  for (const std::string& w : result.warnings) warnings += (warnings.empty() ? "" : "; ") + w;
  line("warnings", warnings);
  line("wall_time_s", format_double(result.wall_seconds));
  for (const auto& [key, value] : describe(config)) line("config." + key, value);
  write_atomically(path, out.str());
}

RunResult run(const RunConfig& config, const fs::path& dir) {
  RunResult result = execute(config);
  try {
    fs::create_directories(dir);
    if (result.ok) {
      write_observables_csv(result, dir / "observables.csv");
      if (config.trajectory.store_states) write_states_csv(result, dir / "states.csv");
    }
  } catch (const std::exception& e) {
    result.ok = false;
    result.error = std::string("output: ") + e.what();
  }
  write_manifest(config, result, dir / "manifest.txt");
  return result;
}

std::vector<SweepPoint> expand_sweep(const RunConfig& config) {
  std::vector<SweepPoint> points;
  RunConfig base = config;
  base.sweep.clear();

  std::size_t total = 1;
  for (const SweepAxis& axis : config.sweep) total *= axis.values.size();

  for (std::size_t flat = 0; flat < total; ++flat) {
    SweepPoint point;
    point.config = base;
    std::size_t rem = flat;
    std::vector<std::size_t> choice(config.sweep.size());
    for (std::size_t a = config.sweep.size(); a-- > 0;) {
      choice[a] = rem % config.sweep[a].values.size();
      rem /= config.sweep[a].values.size();
    }
    for (std::size_t a = 0; a < config.sweep.size(); ++a) {
      const std::string& value = config.sweep[a].values[choice[a]];
      apply_setting(point.config, config.sweep[a].key, value);
      point.parameters.emplace_back(config.sweep[a].key, value);
    }
    char id[32];
    std::snprintf(id, sizeof id, "run_%04zu", flat);
    point.id = id;
    points.push_back(std::move(point));
  }
  return points;
}

bool SweepResult::all_ok() const {
  for (const SweepEntry& e : entries) {
    if (!e.result.ok) return false;
  }
  return true;
}

SweepResult sweep(const RunConfig& config, const fs::path& dir, std::size_t workers) {
  SweepResult out;
  for (SweepPoint& p : expand_sweep(config)) out.entries.push_back({std::move(p), {}});

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < out.entries.size(); i = next++) {
      SweepEntry& e = out.entries[i];
      e.result = run(e.point.config, dir / e.point.id);
      e.result.trajectory.states.clear();
    }
  };
  const std::size_t n_threads = std::max<std::size_t>(1, std::min(workers, out.entries.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  // Index columns: id, dir, status, swept keys, then final-time values.
  std::vector<std::string> axis_keys;
  for (const SweepAxis& axis : config.sweep) axis_keys.push_back(axis.key);
  std::vector<std::string> value_columns;
  for (const SweepEntry& e : out.entries) {
    for (std::size_t c = 1; c < e.result.header.size(); ++c) {
      if (std::find(value_columns.begin(), value_columns.end(), e.result.header[c]) ==
          value_columns.end()) {
        value_columns.push_back(e.result.header[c]);
      }
    }
  }

  std::ostringstream index;
  std::vector<std::string> header{"run_id", "dir", "status", "error"};
  header.insert(header.end(), axis_keys.begin(), axis_keys.end());
  header.push_back("final_time");
  for (const std::string& c : value_columns) header.push_back("final_" + c);
  csv::write_row(index, header);
  for (const SweepEntry& e : out.entries) {
    std::vector<std::string> row{e.point.id, e.point.id, e.result.ok ? "ok" : "failed",
                                 e.result.error};
    for (const auto& [key, value] : e.point.parameters) row.push_back(value);
    std::map<std::string, std::string> finals;
    if (e.result.ok && !e.result.rows.empty()) {
      const auto& last = e.result.rows.back();
      row.push_back(csv::format_number(last[0]));
      for (std::size_t c = 1; c < e.result.header.size(); ++c) {
        finals[e.result.header[c]] = csv::format_number(last[c]);
      }
    } else {
      row.push_back("");
    }
    for (const std::string& c : value_columns) row.push_back(finals.count(c) ? finals[c] : "");
    csv::write_row(index, row);
  }
  write_atomically(dir / "index.csv", index.str());
  return out;
}

}  // namespace fermibath
