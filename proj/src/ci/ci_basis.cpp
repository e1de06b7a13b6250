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

#include "hyperion/ci/ci_basis.hpp"

#include <algorithm>
#include <limits>

namespace hyperion::ci {

namespace {

// All k-subsets of n bits in colexicographic (= ascending integer) order.
std::vector<Bits> combinations(int n, int k) {
  std::vector<Bits> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  out.reserve(binomial(n, k));
  Bits x = (Bits{1} << k) - 1;
  const Bits limit = Bits{1} << n;
  while (x < limit) {
    out.push_back(x);
    Bits low = x & (~x + 1);
    Bits ripple = x + low;
    x = (((ripple ^ x) >> 2) / low) | ripple;
  }
  return out;
}

Bits scatter(Bits spatial_bits, Spin spin, int n_spatial, SpinOrdering ordering) {
  Bits out = 0;
  while (spatial_bits) {
    int p = __builtin_ctzll(spatial_bits);
    spatial_bits &= spatial_bits - 1;
    out |= Bits{1} << spin_orbital_index(p, spin, n_spatial, ordering);
  }
  return out;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) throw ContractError("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

SubspaceStats subspace_stats_formula(int n_qubits, int n_alpha, int n_beta) {
  if (n_qubits < 0 || n_qubits > 62 || n_qubits % 2 != 0)
    throw ContractError("subspace_stats: qubit count must be even and <= 62");
  SubspaceStats s;
  s.hilbert = std::uint64_t{1} << n_qubits;
  s.ci = binomial(n_qubits, n_alpha + n_beta);
  s.ci_k = binomial(n_qubits / 2, n_alpha) * binomial(n_qubits / 2, n_beta);
  s.filling_ratio = static_cast<double>(s.ci_k) / static_cast<double>(s.hilbert);
  return s;
}

CiBasis CiBasis::enumerate(int n_qubits, int n_alpha, int n_beta, SpinOrdering ordering) {
  if (n_qubits > 62) throw ContractError("CiBasis: more than 62 qubits exceeds the index width");
  if (n_qubits < 0 || n_qubits % 2 != 0) throw ContractError("CiBasis: qubit count must be even");
  const int n_spatial = n_qubits / 2;
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_spatial || n_beta > n_spatial)
    throw ContractError("CiBasis: spin occupations out of range");
  if (binomial(n_spatial, n_alpha) * binomial(n_spatial, n_beta) >
      std::numeric_limits<std::uint32_t>::max())
    throw ContractError("CiBasis: sector too large for 32-bit positions");

  CiBasis b;
  b.n_qubits_ = n_qubits;
  b.n_alpha_ = n_alpha;
  b.n_beta_ = n_beta;
  b.ordering_ = ordering;

  auto alpha = combinations(n_spatial, n_alpha);
  auto beta = combinations(n_spatial, n_beta);
  for (auto& a : alpha) a = scatter(a, Spin::kAlpha, n_spatial, ordering);
  for (auto& c : beta) c = scatter(c, Spin::kBeta, n_spatial, ordering);

  b.states_.reserve(alpha.size() * beta.size());
  for (Bits a : alpha)
    for (Bits c : beta) b.states_.push_back(a | c);
  std::sort(b.states_.begin(), b.states_.end());

  b.index_.reserve(b.states_.size());
  for (std::size_t i = 0; i < b.states_.size(); ++i)
    b.index_.emplace(b.states_[i], static_cast<std::uint32_t>(i));
  return b;
}

std::optional<std::size_t> CiBasis::index_of(Bits bits) const {
  auto it = index_.find(bits);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CiBasis::index_of(const Configuration& c) const {
  if (c.n_qubits != n_qubits_) return std::nullopt;
  return index_of(c.bits);
}

SubspaceStats CiBasis::stats() const {
  SubspaceStats s = subspace_stats_formula(n_qubits_, n_alpha_, n_beta_);
  s.ci_k = states_.size();
  s.filling_ratio = static_cast<double>(s.ci_k) / static_cast<double>(s.hilbert);
  return s;
}

}  // namespace hyperion::ci
