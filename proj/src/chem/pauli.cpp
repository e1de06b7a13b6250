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

#include "hyperion/chem/pauli.hpp"

#include <algorithm>
#include <cmath>

namespace hyperion::chem {

PauliWord::PauliWord(int n_qubits, Bits x, Bits z) : n_qubits_(n_qubits), x_(x), z_(z) {
  if (n_qubits < 0 || n_qubits > 62) throw ContractError("PauliWord: qubit count out of range");
  Bits allowed = n_qubits == 0 ? 0 : (~Bits{0} >> (64 - n_qubits));
  if (((x | z) & ~allowed) != 0) throw ContractError("PauliWord: letter beyond qubit count");
}

PauliWord PauliWord::parse(std::string_view letters) {
  Bits x = 0, z = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    Bits bit = Bits{1} << k;
    switch (letters[k]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default: throw ParseError("PauliWord: bad letter '" + std::string(1, letters[k]) + "'");
    }
  }
  return PauliWord(static_cast<int>(letters.size()), x, z);
}

PauliWord PauliWord::single(int n_qubits, int qubit, Pauli p) {
  Bits bit = Bits{1} << qubit;
  Bits x = (p == Pauli::X || p == Pauli::Y) ? bit : 0;
  Bits z = (p == Pauli::Z || p == Pauli::Y) ? bit : 0;
  return PauliWord(n_qubits, x, z);
}

Pauli PauliWord::letter(int qubit) const {
  bool xb = (x_ >> qubit) & 1u, zb = (z_ >> qubit) & 1u;
  if (xb && zb) return Pauli::Y;
  if (xb) return Pauli::X;
  if (zb) return Pauli::Z;
  return Pauli::I;
}

std::string PauliWord::to_string() const {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::string s(static_cast<std::size_t>(n_qubits_), 'I');
  for (int k = 0; k < n_qubits_; ++k) s[static_cast<std::size_t>(k)] = kLetters[static_cast<int>(letter(k))];
  return s;
}

std::strong_ordering PauliWord::operator<=>(const PauliWord& o) const {
  if (auto c = n_qubits_ <=> o.n_qubits_; c != 0) return c;
  Bits diff = (x_ ^ o.x_) | (z_ ^ o.z_);
  if (diff == 0) return std::strong_ordering::equal;
  int k = __builtin_ctzll(diff);
  return static_cast<int>(letter(k)) <=> static_cast<int>(o.letter(k));
}

PauliSum PauliSum::from_terms(int n_qubits, std::vector<PauliTerm> terms, double drop_tolerance) {
  for (const auto& t : terms) {
    if (t.word.n_qubits() != n_qubits) throw ContractError("PauliSum: term has wrong qubit count");
    if (!std::isfinite(t.coefficient)) throw ContractError("PauliSum: non-finite coefficient");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const PauliTerm& a, const PauliTerm& b) { return a.word < b.word; });
  PauliSum out(n_qubits);
  for (const auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().word == t.word)
      out.terms_.back().coefficient += t.coefficient;
    else
      out.terms_.push_back(t);
  }
  std::erase_if(out.terms_, [&](const PauliTerm& t) { return std::abs(t.coefficient) <= drop_tolerance; });
  return out;
}

double PauliSum::identity_coefficient() const {
  for (const auto& t : terms_)
    if (t.word.is_identity()) return t.coefficient;
  return 0.0;
}

PauliSum PauliSum::scaled(double factor) const {
  PauliSum out(n_qubits_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coefficient *= factor;
  return out;
}

}  // namespace hyperion::chem
