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

#include "fermibath/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace fermibath {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto item = trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start));
    if (item.empty()) throw DomainError("empty item in list '" + std::string(s) + "'");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double to_double(std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw DomainError("expected a finite number, got '" + std::string(v) + "'");
  }
  return out;
}

std::uint64_t to_unsigned(std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw DomainError("expected a non-negative integer, got '" + std::string(v) + "'");
  }
  return out;
}

bool to_bool(std::string_view v) {
  if (v == "on" || v == "true" || v == "yes" || v == "1") return true;
  if (v == "off" || v == "false" || v == "no" || v == "0") return false;
  throw DomainError("expected on/off, got '" + std::string(v) + "'");
}

std::string on_off(bool b) { return b ? "on" : "off"; }

CouplingParameters& coupling(RunConfig& c) {
  if (!c.model.coupling) c.model.coupling.emplace();
  return *c.model.coupling;
}

struct KeyInfo {
  std::string_view section;
  std::string_view key;
  bool sweepable;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

const std::vector<KeyInfo>& key_table() {
  static const std::vector<KeyInfo> table = {
      {"model", "topology", true,
       [](RunConfig& c, std::string_view v) { c.model.topology.closed = parse_closed(v); },
       [](const RunConfig& c) { return std::string(to_string(c.model.topology)); }},
      {"model", "n_sites", true,
       [](RunConfig& c, std::string_view v) { c.model.topology.n_sites = to_unsigned(v); },
       [](const RunConfig& c) { return std::to_string(c.model.topology.n_sites); }},
      {"model", "max_sites", false,
       [](RunConfig& c, std::string_view v) { c.model.max_sites = to_unsigned(v); },
       [](const RunConfig& c) { return std::to_string(c.model.max_sites); }},
      {"model", "convention", true,
       [](RunConfig& c, std::string_view v) { c.model.convention = parse_convention(v); },
       [](const RunConfig& c) { return std::string(to_string(c.model.convention)); }},
      {"model", "gamma", true,
       [](RunConfig& c, std::string_view v) {
         c.model.gamma = to_double(v);
         c.model.coupling.reset();
       },
       [](const RunConfig& c) { return format_double(c.model.gamma); }},
      {"model", "J", true, [](RunConfig& c, std::string_view v) { c.model.hamiltonian.J = to_double(v); },
       [](const RunConfig& c) { return format_double(c.model.hamiltonian.J); }},
      {"model", "U", true, [](RunConfig& c, std::string_view v) { c.model.hamiltonian.U = to_double(v); },
       [](const RunConfig& c) { return format_double(c.model.hamiltonian.U); }},
      {"model", "delta_R", true,
       [](RunConfig& c, std::string_view v) { c.model.hamiltonian.delta_R = to_double(v); },
       [](const RunConfig& c) { return format_double(c.model.hamiltonian.delta_R); }},
      {"model", "omega_R", true,
       [](RunConfig& c, std::string_view v) { c.model.hamiltonian.omega_R = to_double(v); },
       [](const RunConfig& c) { return format_double(c.model.hamiltonian.omega_R); }},
      {"model", "unitary", true, [](RunConfig& c, std::string_view v) { c.model.unitary = to_bool(v); },
       [](const RunConfig& c) { return on_off(c.model.unitary); }},
      {"coupling", "a_S", true, [](RunConfig& c, std::string_view v) { coupling(c).a_S = to_double(v); },
       [](const RunConfig& c) { return format_double(c.model.coupling->a_S); }},
      {"coupling", "mu_R", true, [](RunConfig& c, std::string_view v) { coupling(c).mu_R = to_double(v); },
       [](const RunConfig& c) { return format_double(c.model.coupling->mu_R); }},
      {"coupling", "rho_C", true, [](RunConfig& c, std::string_view v) { coupling(c).rho_C = to_double(v); },
       [](const RunConfig& c) { return format_double(c.model.coupling->rho_C); }},
      {"coupling", "volume", true, [](RunConfig& c, std::string_view v) { coupling(c).volume = to_double(v); },
       [](const RunConfig& c) { return format_double(c.model.coupling->volume); }},
      {"coupling", "mode_sum", true,
       [](RunConfig& c, std::string_view v) { coupling(c).mode_sum = to_double(v); },
       [](const RunConfig& c) { return format_double(c.model.coupling->mode_sum); }},
      {"trajectory", "t_end", true, [](RunConfig& c, std::string_view v) { c.trajectory.t_end = to_double(v); },
       [](const RunConfig& c) { return format_double(c.trajectory.t_end); }},
      {"trajectory", "dt", true, [](RunConfig& c, std::string_view v) { c.trajectory.dt = to_double(v); },
       [](const RunConfig& c) { return format_double(c.trajectory.dt); }},
      {"trajectory", "record_stride", true,
       [](RunConfig& c, std::string_view v) { c.trajectory.record_stride = to_unsigned(v); },
       [](const RunConfig& c) { return std::to_string(c.trajectory.record_stride); }},
      {"trajectory", "method", true,
       [](RunConfig& c, std::string_view v) { c.trajectory.method = parse_method(v); },
       [](const RunConfig& c) { return std::string(to_string(c.trajectory.method)); }},
      {"trajectory", "hermitize", true,
       [](RunConfig& c, std::string_view v) { c.trajectory.hermitize = to_bool(v); },
       [](const RunConfig& c) { return on_off(c.trajectory.hermitize); }},
      {"trajectory", "store_states", false,
       [](RunConfig& c, std::string_view v) { c.trajectory.store_states = to_bool(v); },
       [](const RunConfig& c) { return on_off(c.trajectory.store_states); }},
      {"initial", "initial", true,
       [](RunConfig& c, std::string_view v) {
         if (v != "weights") (void)parse_initial_state(v);
         c.initial = std::string(v);
       },
       [](const RunConfig& c) { return c.initial; }},
      {"initial", "initial_weights", false,
       [](RunConfig& c, std::string_view v) {
         c.initial_weights.clear();
         for (const std::string& item : split_list(v)) {
           const auto colon = item.find(':');
           if (colon == std::string::npos) {
             throw DomainError("weight entry '" + item + "' must look like 010000:0.5");
           }
           c.initial_weights.emplace_back(std::string(trim(std::string_view(item).substr(0, colon))),
                                          to_double(trim(std::string_view(item).substr(colon + 1))));
         }
         c.initial = "weights";
       },
       [](const RunConfig& c) {
         std::string out;
         for (const auto& [bits, w] : c.initial_weights) {
           if (!out.empty()) out += ", ";
           out += bits + ":" + format_double(w);
         }
         return out;
       }},
      {"observables", "observables", false,
       [](RunConfig& c, std::string_view v) {
         c.observables.clear();
         for (const std::string& item : split_list(v)) c.observables.push_back(parse_observable(item));
       },
       [](const RunConfig& c) {
         std::string out;
         for (const ObservableSpec& s : c.resolved_observables()) {
           if (!out.empty()) out += ", ";
           out += s.name();
         }
         return out;
       }},
      {"output", "out_dir", false, [](RunConfig& c, std::string_view v) { c.out_dir = std::string(v); },
       [](const RunConfig& c) { return c.out_dir; }},
      {"output", "name", false, [](RunConfig& c, std::string_view v) { c.name = std::string(v); },
       [](const RunConfig& c) { return c.name; }},
      {"validation", "seed", false, [](RunConfig& c, std::string_view v) { c.seed = to_unsigned(v); },
       [](const RunConfig& c) { return std::to_string(c.seed); }},
      {"validation", "exchange_threshold", true,
       [](RunConfig& c, std::string_view v) { c.exchange_threshold = to_double(v); },
       [](const RunConfig& c) { return format_double(c.exchange_threshold); }},
  };
  return table;
}

const KeyInfo* find_key(std::string_view key) {
  for (const KeyInfo& k : key_table()) {
    if (k.key == key) return &k;
  }
  return nullptr;
}

bool known_section(std::string_view s) {
  if (s == "sweep") return true;
  return std::any_of(key_table().begin(), key_table().end(),
                     [&](const KeyInfo& k) { return k.section == s; });
}

std::string path_of(const KeyInfo& k) {
  return std::string(k.section) + "." + std::string(k.key);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

DensityMatrix RunConfig::initial_state() const {
  const FockSpace space = model.space();
  if (initial != "weights") {
    return fermibath::initial_state(space, parse_initial_state(initial), model.convention);
  }
  if (initial_weights.empty()) throw DomainError("initial_weights is empty");
  std::vector<std::pair<FockState, double>> weights;
  for (const auto& [bits, w] : initial_weights) {
    weights.emplace_back(space.parse_state(bits), w);
  }
  return DensityMatrix::diagonal_mixture(space, weights, model.convention);
}

std::vector<ObservableSpec> RunConfig::resolved_observables() const {
  return observables.empty() ? default_observables(model.topology.n_sites) : observables;
}

void RunConfig::validate() const {
  const auto wrap = [](std::string_view key, const auto& fn) {
    try {
      fn();
    } catch (const Error& e) {
      throw ConfigError("invalid value for " + std::string(key) + ": " + e.what());
    }
  };
  wrap("model", [&] { model.validate(); });
  wrap("trajectory", [&] { trajectory.validate(); });
  wrap("initial.initial", [&] { (void)initial_state(); });
  wrap("observables.observables", [&] {
    for (const ObservableSpec& s : resolved_observables()) {
      if (s.kind == ObservableKind::Occupation && s.site >= model.topology.n_sites) {
        throw DomainError("occupation site " + std::to_string(s.site + 1) +
                          " exceeds lattice size");
      }
    }
  });
  if (!(exchange_threshold > 0.0)) {
    throw ConfigError("invalid value for validation.exchange_threshold: must be positive");
  }
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  const auto dot = key.find('.');
  const std::string_view bare = dot == std::string_view::npos ? key : key.substr(dot + 1);
  const KeyInfo* info = find_key(bare);
  if (info == nullptr || (dot != std::string_view::npos && key.substr(0, dot) != info->section)) {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
  try {
    info->set(config, value);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("invalid value '" + std::string(value) + "' for " + path_of(*info) +
                      ": " + e.what());
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::set<std::string> seen;
  std::string section;
  std::size_t line_no = 0;
  bool gamma_given = false;
  bool coupling_given = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                        : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    const auto hash = raw.find('#');
    std::string_view line = trim(raw.substr(0, hash));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!known_section(section)) throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where + "expected key = value, got '" + std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + "missing key before '='");
    if (value.empty()) throw ConfigError(where + "missing value for '" + std::string(key) + "'");

    const KeyInfo* info = find_key(key);
    if (info == nullptr) throw ConfigError(where + "unknown key '" + std::string(key) + "'");

    if (section == "sweep") {
      if (!info->sweepable) {
        throw ConfigError(where + "key '" + std::string(key) + "' cannot be swept");
      }
      const std::string path = "sweep." + std::string(key);
      if (!seen.insert(path).second) throw ConfigError(where + "duplicate key " + path);
      SweepAxis axis{std::string(key), {}};
      try {
        axis.values = split_list(value);
      } catch (const Error& e) {
        throw ConfigError(where + e.what());
      }
      for (const std::string& v : axis.values) {
        RunConfig probe = config;
        try {
          apply_setting(probe, key, v);
        } catch (const ConfigError& e) {
          throw ConfigError(where + e.what());
        }
      }
      config.sweep.push_back(std::move(axis));
      continue;
    }

    if (!section.empty() && info->section != section) {
      throw ConfigError(where + "unknown key '" + std::string(key) + "' in section [" + section +
                        "]");
    }
    const std::string path = path_of(*info);
    if (!seen.insert(path).second) throw ConfigError(where + "duplicate key " + path);
    try {
      apply_setting(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
    if (key == "gamma") gamma_given = true;
    if (info->section == "coupling") coupling_given = true;
  }

  if (gamma_given && coupling_given) {
    throw ConfigError("model.gamma conflicts with [coupling] parameters; give one or the other");
  }
  if (coupling_given && !config.model.coupling) config.model.coupling.emplace();
  config.validate();
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& config) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const KeyInfo& k : key_table()) {
    if (k.section == "coupling" && !config.model.coupling) continue;
    if (k.key == "gamma" && config.model.coupling) continue;
    if (k.key == "initial_weights" && config.initial != "weights") continue;
    out.emplace_back(path_of(k), k.get(config));
  }
  if (config.model.coupling) {
    out.emplace_back("model.gamma_effective", format_double(config.model.rate()));
  }
  for (const SweepAxis& axis : config.sweep) {
    std::string values;
    for (const std::string& v : axis.values) values += (values.empty() ? "" : ", ") + v;
    out.emplace_back("sweep." + axis.key, values);
  }
  return out;
}

}  // namespace fermibath
