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

#include <compare>
#include <string>
#include <string_view>

#include "hyperion/common.hpp"

namespace hyperion::ci {

/// How spatial orbitals are laid out on qubits.
///
/// Interleaved puts spatial orbital p on qubits (2p, 2p+1) as (alpha, beta).
/// Blocked puts all alpha orbitals first: (p, p + n_spatial).
enum class SpinOrdering { kInterleaved, kBlocked };

enum class Spin { kAlpha, kBeta };

std::string_view to_string(SpinOrdering ordering);
SpinOrdering parse_spin_ordering(std::string_view text);

int spin_orbital_index(int spatial, Spin spin, int n_spatial, SpinOrdering ordering);
Spin spin_of(int qubit, int n_spatial, SpinOrdering ordering);
int spatial_of(int qubit, int n_spatial, SpinOrdering ordering);

/// Mask of all qubits carrying the given spin.
Bits spin_mask(Spin spin, int n_spatial, SpinOrdering ordering);

/// Occupation-number basis state. Qubit k is bit k; an occupied spin orbital
/// is |1>.
struct Configuration {
  Bits bits = 0;
  int n_qubits = 0;

  bool occupied(int qubit) const { return (bits >> qubit) & 1u; }
  int n_electrons() const { return popcount(bits); }
  /// Bit string with qubit 0 rightmost, e.g. qubits {0,1} of 4 -> "0011".
  std::string to_string() const;

  auto operator<=>(const Configuration&) const = default;
};

/// Reference determinant with the lowest spatial orbitals of each spin
/// channel occupied. `n_alpha < 0` selects ceil(n_electrons / 2).
Configuration hartree_fock_reference(int n_electrons, int n_qubits,
                                     SpinOrdering ordering = SpinOrdering::kInterleaved,
                                     int n_alpha = -1);

}  // namespace hyperion::ci
