// Copyright 2026 The Hyperion Desk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperion/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "hyperion/cli/output.hpp"

namespace hyperion::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(x))
    throw ParseError(key + ": expected a number, got '" + v + "'");
  return x;
}

long long parse_int(const std::string& key, const std::string& v, long long lo) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ParseError(key + ": expected an integer, got '" + v + "'");
  if (x < lo) throw ParseError(key + ": must be >= " + std::to_string(lo));
  return x;
}

double positive(const std::string& key, const std::string& v) {
  const double x = parse_double(key, v);
  if (!(x > 0)) throw ParseError(key + ": must be > 0");
  return x;
}

using Setter = std::function<void(RunSettings&, const std::string&, const std::string&)>;
using Getter = std::function<std::string(const RunSettings&)>;

struct Key {
  Setter set;
  Getter get;
};

const std::vector<std::pair<std::string, Key>>& table() {
  static const std::vector<std::pair<std::string, Key>> keys = {
      {"engine",
       {[](RunSettings& s, auto& k, auto& v) {
          try {
            s.adapt.engine = adapt::parse_engine_kind(v);
          } catch (const ParseError& e) {
            throw ParseError(k + ": " + e.what());
          }
        },
        [](const RunSettings& s) { return adapt::to_string(s.adapt.engine); }}},
      {"fcidump", {[](RunSettings& s, auto&, auto& v) { s.fcidump = v; }, [](auto& s) { return s.fcidump; }}},
      {"out", {[](RunSettings& s, auto&, auto& v) { s.out_dir = v; }, [](auto& s) { return s.out_dir; }}},
      {"csr_cache", {[](RunSettings& s, auto&, auto& v) { s.csr_cache = v; }, [](auto& s) { return s.csr_cache; }}},
      {"ordering",
       {[](RunSettings& s, auto& k, auto& v) {
          if (v != "interleaved" && v != "blocked") throw ParseError(k + ": expected interleaved or blocked");
          s.ordering = ci::parse_spin_ordering(v);
        },
        [](const RunSettings& s) { return std::string(ci::to_string(s.ordering)); }}},
      {"threads",
       {[](RunSettings& s, auto& k, auto& v) { s.threads = static_cast<unsigned>(parse_int(k, v, 0)); },
        [](auto& s) { return std::to_string(s.threads); }}},
      {"eps_grad",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.eps_grad = positive(k, v); },
        [](auto& s) { return format_double(s.adapt.eps_grad); }}},
      {"max_iter",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.max_iter = static_cast<int>(parse_int(k, v, 0)); },
        [](auto& s) { return std::to_string(s.adapt.max_iter); }}},
      {"seed",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.seed = static_cast<std::uint64_t>(parse_int(k, v, 0)); },
        [](auto& s) { return std::to_string(s.adapt.seed); }}},
      {"reference_energy",
       {[](RunSettings& s, auto& k, auto& v) {
          if (v == "none")
            s.adapt.reference_energy.reset();
          else
            s.adapt.reference_energy = parse_double(k, v);
        },
        [](const RunSettings& s) {
          return s.adapt.reference_energy ? format_double(*s.adapt.reference_energy) : std::string("none");
        }}},
      {"optimizer",
       {[](RunSettings& s, auto& k, auto& v) {
          try {
            s.adapt.optimizer.kind = adapt::parse_optimizer_kind(v);
          } catch (const ParseError& e) {
            throw ParseError(k + ": " + e.what());
          }
        },
        [](const RunSettings& s) { return adapt::to_string(s.adapt.optimizer.kind); }}},
      {"gtol",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.optimizer.gtol = positive(k, v); },
        [](auto& s) { return format_double(s.adapt.optimizer.gtol); }}},
      {"bfgs_ftol",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.optimizer.bfgs_ftol = positive(k, v); },
        [](auto& s) { return format_double(s.adapt.optimizer.bfgs_ftol); }}},
      {"coordinate_ftol",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.optimizer.coordinate_ftol = positive(k, v); },
        [](auto& s) { return format_double(s.adapt.optimizer.coordinate_ftol); }}},
      {"xtol",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.optimizer.xtol = positive(k, v); },
        [](auto& s) { return format_double(s.adapt.optimizer.xtol); }}},
      {"min_sweeps",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.optimizer.min_sweeps = static_cast<int>(parse_int(k, v, 1)); },
        [](auto& s) { return std::to_string(s.adapt.optimizer.min_sweeps); }}},
      {"max_sweeps",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.optimizer.max_sweeps = static_cast<int>(parse_int(k, v, 1)); },
        [](auto& s) { return std::to_string(s.adapt.optimizer.max_sweeps); }}},
      {"max_evals",
       {[](RunSettings& s, auto& k, auto& v) {
          s.adapt.optimizer.max_evals = static_cast<std::size_t>(parse_int(k, v, 1));
        },
        [](auto& s) { return std::to_string(s.adapt.optimizer.max_evals); }}},
      {"delta",
       {[](RunSettings& s, auto& k, auto& v) {
          const double d = parse_double(k, v);
          if (d < 0) throw ParseError(k + ": must be >= 0");
          s.adapt.engine_options.delta = d;
        },
        [](auto& s) { return format_double(s.adapt.engine_options.delta); }}},
      {"truncation",
       {[](RunSettings& s, auto& k, auto& v) {
          using Mode = mps::TruncationPolicy::Mode;
          if (v == "absolute")
            s.adapt.engine_options.truncation_mode = Mode::kAbsolute;
          else if (v == "relative")
            s.adapt.engine_options.truncation_mode = Mode::kRelative;
          else
            throw ParseError(k + ": expected absolute or relative");
        },
        [](const RunSettings& s) {
          return std::string(s.adapt.engine_options.truncation_mode == mps::TruncationPolicy::Mode::kRelative
                                 ? "relative"
                                 : "absolute");
        }}},
      {"bond_cap",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.engine_options.bond_cap = parse_int(k, v, 0); },
        [](auto& s) { return std::to_string(s.adapt.engine_options.bond_cap); }}},
      {"eta",
       {[](RunSettings& s, auto& k, auto& v) { s.adapt.engine_options.eta = static_cast<int>(parse_int(k, v, 1)); },
        [](auto& s) { return std::to_string(s.adapt.engine_options.eta); }}},
  };
  return keys;
}

const Key& lookup(const std::string& key) {
  for (const auto& [name, k] : table())
    if (name == key) return k;
  throw ParseError("unknown setting '" + key + "'");
}

}  // namespace

const std::vector<std::string>& run_config_keys() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, k] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

void apply_setting(RunSettings& settings, const std::string& key, const std::string& value) {
  std::string k = key;
  std::replace(k.begin(), k.end(), '-', '_');
  lookup(k).set(settings, k, trim(value));
}

void load_run_config(std::istream& in, RunSettings& settings) {
  std::set<std::string> seen;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(number) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (!seen.insert(key).second) throw ParseError("config line " + std::to_string(number) + ": repeated key '" + key + "'");
    try {
      apply_setting(settings, key, line.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError("config line " + std::to_string(number) + ": " + e.what());
    }
  }
}

void require_complete(const RunSettings& settings) {
  if (settings.fcidump.empty()) throw ParseError("missing required setting 'fcidump'");
  if (settings.out_dir.empty()) throw ParseError("missing required setting 'out'");
}

nlohmann::json config_echo(const RunSettings& settings) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, k] : table()) j[name] = k.get(settings);
  return j;
}

}  // namespace hyperion::cli
