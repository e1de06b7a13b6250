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

#include "hyperion/adapt/pool.hpp"

#include <algorithm>

namespace hyperion::adapt {

std::vector<sv::ExcitationOperator> build_qeb_pool(int n_qubits, int n_alpha, int n_beta, ci::SpinOrdering ordering) {
  if (n_qubits <= 0 || n_qubits % 2 != 0 || n_qubits > 64) throw ContractError("build_qeb_pool: bad qubit count");
  const int norb = n_qubits / 2;
  if (n_alpha < 0 || n_beta < 0 || n_alpha > norb || n_beta > norb)
    throw ContractError("build_qeb_pool: electron counts do not fit the orbitals");
  const auto hf = ci::hartree_fock_reference(n_alpha + n_beta, n_qubits, ordering, n_alpha);
  std::vector<int> occ, vir;
  for (int q = 0; q < n_qubits; ++q) (hf.occupied(q) ? occ : vir).push_back(q);
  auto sz = [&](int q) { return ci::spin_of(q, norb, ordering) == ci::Spin::kAlpha ? 1 : -1; };

  std::vector<sv::ExcitationOperator> pool;
  for (int i : occ)
    for (int a : vir)
      if (sz(i) == sz(a)) pool.push_back(sv::ExcitationOperator::single(i, a));
  for (std::size_t x = 0; x < occ.size(); ++x)
    for (std::size_t y = x + 1; y < occ.size(); ++y)
      for (std::size_t u = 0; u < vir.size(); ++u)
        for (std::size_t v = u + 1; v < vir.size(); ++v)
          if (sz(occ[x]) + sz(occ[y]) == sz(vir[u]) + sz(vir[v]))
            pool.push_back(sv::ExcitationOperator::double_(occ[x], occ[y], vir[u], vir[v]));
  if (pool.empty()) throw ContractError("build_qeb_pool: no virtual orbitals to excite into");
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<sv::ExcitationOperator> build_qeb_pool(int n_qubits, int n_electrons, ci::SpinOrdering ordering) {
  return build_qeb_pool(n_qubits, (n_electrons + 1) / 2, n_electrons / 2, ordering);
}

}  // namespace hyperion::adapt
