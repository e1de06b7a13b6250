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
#include <vector>

#include "hyperion/common.hpp"

namespace hyperion::chem {

enum class Pauli : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

/// An n-qubit Pauli string in symplectic form: X on qubit k sets bit k of
/// `x`, Z sets bit k of `z`, Y sets both.
class PauliWord {
 public:
  PauliWord() = default;
  PauliWord(int n_qubits, Bits x, Bits z);
  explicit PauliWord(int n_qubits) : PauliWord(n_qubits, 0, 0) {}

  /// Letters listed from qubit 0 upward, e.g. "XIZY".
  static PauliWord parse(std::string_view letters);
  /// Single letter on one qubit, identity elsewhere.
  static PauliWord single(int n_qubits, int qubit, Pauli p);

  int n_qubits() const { return n_qubits_; }
  Bits x_mask() const { return x_; }
  Bits z_mask() const { return z_; }
  Bits support() const { return x_ | z_; }
  Pauli letter(int qubit) const;
  int y_count() const { return popcount(x_ & z_); }
  bool is_identity() const { return (x_ | z_) == 0; }

  std::string to_string() const;

  /// Lexicographic over letters from qubit 0, with I < X < Y < Z.
  std::strong_ordering operator<=>(const PauliWord& o) const;
  bool operator==(const PauliWord& o) const = default;

 private:
  int n_qubits_ = 0;
  Bits x_ = 0;
  Bits z_ = 0;
};

struct PauliTerm {
  double coefficient = 0.0;
  PauliWord word;
};

/// Canonically sorted, duplicate-merged list of real-weighted Pauli terms.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}

  /// Merges duplicates, drops |c| <= drop_tolerance, sorts.
  static PauliSum from_terms(int n_qubits, std::vector<PauliTerm> terms, double drop_tolerance = 1e-12);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the identity word (0 when absent).
  double identity_coefficient() const;
  PauliSum scaled(double factor) const;

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

}  // namespace hyperion::chem
