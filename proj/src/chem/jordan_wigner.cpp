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

#include "hyperion/chem/jordan_wigner.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <unordered_map>

namespace hyperion::chem {

namespace {

using Complex = std::complex<double>;

struct WordKey {
  Bits x;
  Bits z;
  bool operator==(const WordKey&) const = default;
};

struct WordKeyHash {
  std::size_t operator()(const WordKey& k) const {
    return std::hash<Bits>()(k.x * 0x9E3779B97F4A7C15ull ^ (k.z + 0x632BE59BD9B4E019ull));
  }
};

struct ComplexTerm {
  Complex coefficient;
  Bits x;
  Bits z;
};

// Product of two Pauli strings as (power of i, x, z).
ComplexTerm multiply(const ComplexTerm& a, const ComplexTerm& b) {
  // Phase table indexed [left letter][right letter] with I=0, X=1, Y=2, Z=3.
  static constexpr int kPhase[4][4] = {{0, 0, 0, 0}, {0, 0, 1, 3}, {0, 3, 0, 1}, {0, 1, 3, 0}};
  int power = 0;
  Bits both = (a.x | a.z) & (b.x | b.z);
  while (both) {
    int k = __builtin_ctzll(both);
    both &= both - 1;
    auto letter = [k](Bits x, Bits z) {
      int xb = (x >> k) & 1u, zb = (z >> k) & 1u;
      return xb ? (zb ? 2 : 1) : (zb ? 3 : 0);
    };
    power += kPhase[letter(a.x, a.z)][letter(b.x, b.z)];
  }
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return {a.coefficient * b.coefficient * kIPow[power % 4], a.x ^ b.x, a.z ^ b.z};
}

using Ladder = std::array<ComplexTerm, 2>;

Ladder ladder(int p, bool creation) {
  Bits zs = (Bits{1} << p) - 1;
  Bits bit = Bits{1} << p;
  double sign = creation ? -1.0 : 1.0;
  return {ComplexTerm{{0.5, 0.0}, bit, zs}, ComplexTerm{{0.0, 0.5 * sign}, bit, zs | bit}};
}

class Accumulator {
 public:
  void add(const ComplexTerm& t) { map_[WordKey{t.x, t.z}] += t.coefficient; }

  template <std::size_t N>
  void add_product(Complex coefficient, const std::array<Ladder, N>& ops) {
    for (std::size_t combo = 0; combo < (std::size_t{1} << N); ++combo) {
      ComplexTerm acc{coefficient, 0, 0};
      for (std::size_t k = 0; k < N; ++k) acc = multiply(acc, ops[k][(combo >> k) & 1u]);
      add(acc);
    }
  }

  PauliSum finish(int n_qubits) const {
    std::vector<PauliTerm> terms;
    terms.reserve(map_.size());
    for (const auto& [key, c] : map_) {
      if (std::abs(c.imag()) > 1e-12)
        throw ContractError("jordan_wigner: residual imaginary coefficient " + std::to_string(c.imag()) +
                            " (non-Hermitian input)");
      terms.push_back({c.real(), PauliWord(n_qubits, key.x, key.z)});
    }
    return PauliSum::from_terms(n_qubits, std::move(terms), 1e-12);
  }

 private:
  std::unordered_map<WordKey, Complex, WordKeyHash> map_;
};

}  // namespace

PauliSum jordan_wigner(const SecondQuantizedHamiltonian& sq) {
  const int n = sq.n_spin_orbitals;
  if (n < 1 || n > 62) throw ContractError("jordan_wigner: spin-orbital count out of range");
  Accumulator acc;
  acc.add({{sq.core_energy, 0.0}, 0, 0});

  std::vector<Ladder> create(static_cast<std::size_t>(n)), destroy(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    create[static_cast<std::size_t>(p)] = ladder(p, true);
    destroy[static_cast<std::size_t>(p)] = ladder(p, false);
  }
  auto at = [](const std::vector<Ladder>& v, int k) -> const Ladder& { return v[static_cast<std::size_t>(k)]; };

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      double h = sq.one(p, q);
      if (h == 0.0) continue;
      acc.add_product<2>({h, 0.0}, {at(create, p), at(destroy, q)});
    }

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (r == s) continue;
          double g = sq.two(p, q, r, s);
          if (g == 0.0) continue;
          acc.add_product<4>({0.5 * g, 0.0}, {at(create, p), at(create, q), at(destroy, s), at(destroy, r)});
        }
    }
  return acc.finish(n);
}

PauliSum qubit_hamiltonian(const IntegralSet& ints, ci::SpinOrdering ordering) {
  return jordan_wigner(to_spin_orbital(ints, ordering));
}

}  // namespace hyperion::chem
