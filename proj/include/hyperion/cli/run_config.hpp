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

#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperion/adapt/adapt.hpp"

namespace hyperion::cli {

/// Everything `run` needs. Config files and `--key value` flags both go
/// through apply_setting, so every key is also a flag.
struct RunSettings {
  adapt::AdaptConfig adapt;
  std::string fcidump;
  std::string out_dir;
  std::string csr_cache;  // optional prebuilt matrix for the sv engine
  ci::SpinOrdering ordering = ci::SpinOrdering::kInterleaved;
  unsigned threads = 0;  // 0 = all cores
};

/// Accepted keys, in echo order.
const std::vector<std::string>& run_config_keys();

/// Sets one key. Throws ParseError on an unknown key or a value outside the
/// key's domain.
void apply_setting(RunSettings& settings, const std::string& key, const std::string& value);

/// Reads `key = value` lines; '#' starts a comment. Repeated keys are an error.
void load_run_config(std::istream& in, RunSettings& settings);

/// Throws ParseError when fcidump or out is missing.
void require_complete(const RunSettings& settings);

/// Every key with its effective value, as strings accepted by apply_setting.
nlohmann::json config_echo(const RunSettings& settings);

}  // namespace hyperion::cli
