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

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace hyperion::chem {

/// Spatial-orbital electron integrals in chemists' notation.
struct IntegralSet {
  int norb = 0;
  int nelec = 0;
  int ms2 = 0;
  double core_energy = 0.0;
  std::vector<double> one_body;  // norb x norb, row-major
  std::vector<double> two_body;  // (pq|rs) at ((p*norb + q)*norb + r)*norb + s

  double h(int p, int q) const { return one_body[static_cast<std::size_t>(p * norb + q)]; }
  double eri(int p, int q, int r, int s) const {
    return two_body[static_cast<std::size_t>(((p * norb + q) * norb + r) * norb + s)];
  }

  int n_alpha() const { return (nelec + ms2) / 2; }
  int n_beta() const { return (nelec - ms2) / 2; }

  /// Checks the symmetry and range invariants; throws ContractError.
  void validate() const;
};

/// Parses a Molpro-convention FCIDUMP. Indices are 1-based; (0 0 0 0) is the
/// core energy, (i j 0 0) a one-body integral, (i 0 0 0) an orbital energy
/// (ignored). ORBSYM/ISYM are accepted and ignored.
IntegralSet parse_fcidump(std::istream& in);
IntegralSet parse_fcidump_string(const std::string& text);
IntegralSet read_fcidump(const std::filesystem::path& path);

}  // namespace hyperion::chem
