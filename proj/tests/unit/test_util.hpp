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

#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#include "hyperion/chem/fcidump.hpp"

namespace hyperion::testing {

inline std::string data_path(const std::string& name) { return std::string(HYPERION_DATA_DIR) + "/" + name; }

inline chem::IntegralSet fixture(const std::string& molecule) { return chem::read_fcidump(data_path(molecule + ".fcidump")); }

/// Reference energy recorded next to the fixtures ("hf_energy" or "fci_energy").
inline double reference(const std::string& molecule, const std::string& key) {
  std::ifstream in(data_path("references.json"));
  auto j = nlohmann::json::parse(in);
  return j.at(molecule).at(key).get<double>();
}

}  // namespace hyperion::testing
