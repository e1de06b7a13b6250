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

#include <vector>

#include "hyperion/chem/fcidump.hpp"
#include "hyperion/ci/configuration.hpp"

namespace hyperion::chem {

/// Spin-orbital Hamiltonian
///   H = E_core + sum_pq h_pq a+_p a_q + 1/2 sum_pqrs g_pqrs a+_p a+_q a_s a_r
/// with g stored plain (not antisymmetrised): g_pqrs = <pq|rs> = (pr|qs).
struct SecondQuantizedHamiltonian {
  int n_spin_orbitals = 0;
  double core_energy = 0.0;
  std::vector<double> h;  // N x N row-major
  std::vector<double> g;  // N^4, index ((p*N + q)*N + r)*N + s
  ci::SpinOrdering ordering = ci::SpinOrdering::kInterleaved;

  static SecondQuantizedHamiltonian zeros(int n_spin_orbitals,
                                          ci::SpinOrdering ordering = ci::SpinOrdering::kInterleaved);

  double& one(int p, int q) { return h[static_cast<std::size_t>(p * n_spin_orbitals + q)]; }
  double one(int p, int q) const { return h[static_cast<std::size_t>(p * n_spin_orbitals + q)]; }
  double& two(int p, int q, int r, int s) { return g[index(p, q, r, s)]; }
  double two(int p, int q, int r, int s) const { return g[index(p, q, r, s)]; }

 private:
  std::size_t index(int p, int q, int r, int s) const {
    const auto n = static_cast<std::size_t>(n_spin_orbitals);
    return ((static_cast<std::size_t>(p) * n + static_cast<std::size_t>(q)) * n +
            static_cast<std::size_t>(r)) * n + static_cast<std::size_t>(s);
  }
};

SecondQuantizedHamiltonian to_spin_orbital(const IntegralSet& ints,
                                           ci::SpinOrdering ordering = ci::SpinOrdering::kInterleaved);

}  // namespace hyperion::chem
