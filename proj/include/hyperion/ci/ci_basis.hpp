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

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hyperion/ci/configuration.hpp"

namespace hyperion::ci {

/// Sizes of the nested configuration spaces of an n-qubit problem.
struct SubspaceStats {
  std::uint64_t hilbert = 0;   // 2^n
  std::uint64_t ci = 0;        // C(n, n_alpha + n_beta)
  std::uint64_t ci_k = 0;      // C(n/2, n_alpha) * C(n/2, n_beta)
  double filling_ratio = 0.0;  // ci_k / hilbert
};

/// Exact binomial coefficient; throws on 64-bit overflow.
std::uint64_t binomial(int n, int k);

/// Counts from the combinatorial formulas alone, no enumeration.
SubspaceStats subspace_stats_formula(int n_qubits, int n_alpha, int n_beta);

/// The fixed-(n_alpha, n_beta) sector of the occupation-number basis.
/// Immutable after construction; safe for concurrent reads.
class CiBasis {
 public:
  static CiBasis enumerate(int n_qubits, int n_alpha, int n_beta,
                           SpinOrdering ordering = SpinOrdering::kInterleaved);

  int n_qubits() const { return n_qubits_; }
  int n_alpha() const { return n_alpha_; }
  int n_beta() const { return n_beta_; }
  SpinOrdering ordering() const { return ordering_; }

  std::size_t size() const { return states_.size(); }
  /// Configurations in strictly ascending bit order.
  const std::vector<Bits>& states() const { return states_; }
  Configuration state(std::size_t i) const { return {states_[i], n_qubits_}; }

  std::optional<std::size_t> index_of(Bits bits) const;
  std::optional<std::size_t> index_of(const Configuration& c) const;
  bool contains(Bits bits) const { return index_.find(bits) != index_.end(); }

  SubspaceStats stats() const;

 private:
  CiBasis() = default;

  int n_qubits_ = 0;
  int n_alpha_ = 0;
  int n_beta_ = 0;
  SpinOrdering ordering_ = SpinOrdering::kInterleaved;
  std::vector<Bits> states_;
  std::unordered_map<Bits, std::uint32_t> index_;
};

}  // namespace hyperion::ci
