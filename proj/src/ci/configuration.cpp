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

#include "hyperion/ci/configuration.hpp"

namespace hyperion::ci {

std::string_view to_string(SpinOrdering ordering) {
  return ordering == SpinOrdering::kInterleaved ? "interleaved" : "blocked";
}

SpinOrdering parse_spin_ordering(std::string_view text) {
  if (text == "interleaved") return SpinOrdering::kInterleaved;
  if (text == "blocked") return SpinOrdering::kBlocked;
  throw ParseError("unknown spin ordering '" + std::string(text) + "'");
}

int spin_orbital_index(int spatial, Spin spin, int n_spatial, SpinOrdering ordering) {
  int s = spin == Spin::kAlpha ? 0 : 1;
  return ordering == SpinOrdering::kInterleaved ? 2 * spatial + s : spatial + s * n_spatial;
}

Spin spin_of(int qubit, int n_spatial, SpinOrdering ordering) {
  if (ordering == SpinOrdering::kInterleaved) return (qubit % 2 == 0) ? Spin::kAlpha : Spin::kBeta;
  return qubit < n_spatial ? Spin::kAlpha : Spin::kBeta;
}

int spatial_of(int qubit, int n_spatial, SpinOrdering ordering) {
  if (ordering == SpinOrdering::kInterleaved) return qubit / 2;
  return qubit < n_spatial ? qubit : qubit - n_spatial;
}

Bits spin_mask(Spin spin, int n_spatial, SpinOrdering ordering) {
  Bits mask = 0;
  for (int p = 0; p < n_spatial; ++p) mask |= Bits{1} << spin_orbital_index(p, spin, n_spatial, ordering);
  return mask;
}

std::string Configuration::to_string() const {
  std::string out(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q)
    if (occupied(q)) out[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
  return out;
}

Configuration hartree_fock_reference(int n_electrons, int n_qubits, SpinOrdering ordering,
                                     int n_alpha) {
  if (n_qubits < 0 || n_qubits > 62 || n_qubits % 2 != 0)
    throw ContractError("hartree_fock_reference: qubit count must be even and <= 62");
  if (n_electrons < 0 || n_electrons > n_qubits)
    throw ContractError("hartree_fock_reference: electron count out of range");
  int n_spatial = n_qubits / 2;
  if (n_alpha < 0) n_alpha = (n_electrons + 1) / 2;
  int n_beta = n_electrons - n_alpha;
  if (n_alpha > n_spatial || n_beta < 0 || n_beta > n_spatial)
    throw ContractError("hartree_fock_reference: spin occupations do not fit");
  Configuration c{0, n_qubits};
  for (int p = 0; p < n_alpha; ++p) c.bits |= Bits{1} << spin_orbital_index(p, Spin::kAlpha, n_spatial, ordering);
  for (int p = 0; p < n_beta; ++p) c.bits |= Bits{1} << spin_orbital_index(p, Spin::kBeta, n_spatial, ordering);
  return c;
}

}  // namespace hyperion::ci
