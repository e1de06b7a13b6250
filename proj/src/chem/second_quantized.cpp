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

#include "hyperion/chem/second_quantized.hpp"

namespace hyperion::chem {

SecondQuantizedHamiltonian SecondQuantizedHamiltonian::zeros(int n_spin_orbitals,
                                                             ci::SpinOrdering ordering) {
  SecondQuantizedHamiltonian sq;
  sq.n_spin_orbitals = n_spin_orbitals;
  sq.ordering = ordering;
  const auto n = static_cast<std::size_t>(n_spin_orbitals);
  sq.h.assign(n * n, 0.0);
  sq.g.assign(n * n * n * n, 0.0);
  return sq;
}

SecondQuantizedHamiltonian to_spin_orbital(const IntegralSet& ints, ci::SpinOrdering ordering) {
  ints.validate();
  const int norb = ints.norb;
  auto sq = SecondQuantizedHamiltonian::zeros(2 * norb, ordering);
  sq.core_energy = ints.core_energy;

  using ci::Spin;
  const Spin spins[2] = {Spin::kAlpha, Spin::kBeta};
  auto so = [&](int p, Spin s) { return ci::spin_orbital_index(p, s, norb, ordering); };

  for (Spin s : spins)
    for (int p = 0; p < norb; ++p)
      for (int q = 0; q < norb; ++q) sq.one(so(p, s), so(q, s)) = ints.h(p, q);

  // <pq|rs> = (pr|qs): electron 1 goes p -> r, electron 2 goes q -> s.
  for (Spin s1 : spins)
    for (Spin s2 : spins)
      for (int p = 0; p < norb; ++p)
        for (int q = 0; q < norb; ++q)
          for (int r = 0; r < norb; ++r)
            for (int s = 0; s < norb; ++s)
              sq.two(so(p, s1), so(q, s2), so(r, s1), so(s, s2)) = ints.eri(p, r, q, s);
  return sq;
}

}  // namespace hyperion::chem
