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

#include <array>
#include <compare>
#include <string>

#include "hyperion/ci/configuration.hpp"

namespace hyperion::sv {

/// Qubit-excitation generator T = Q+_to Q_from - h.c. (no Jordan-Wigner
/// strings). A single moves one electron p -> q; a double moves the pair
/// (p, q) -> (r, s). T^3 = -T, so exp(theta T) = I + sin T + (1 - cos) T^2.
class ExcitationOperator {
 public:
  enum class Kind { kSingle, kDouble };

  static ExcitationOperator single(int from, int to);
  /// Indices are sorted within each pair; all four must be distinct.
  static ExcitationOperator double_(int p, int q, int r, int s);
  /// Parses the text produced by to_string().
  static ExcitationOperator parse(const std::string& text);

  Kind kind() const { return kind_; }
  int rank() const { return kind_ == Kind::kSingle ? 1 : 2; }
  /// Qubits vacated by the forward excitation: (p) or (p, q).
  std::array<int, 2> from() const { return from_; }
  /// Qubits filled by the forward excitation: (q) or (r, s).
  std::array<int, 2> to() const { return to_; }
  Bits from_mask() const;
  Bits to_mask() const;
  Bits support() const { return from_mask() | to_mask(); }
  int max_qubit() const;

  bool spin_conserving(int n_spatial, ci::SpinOrdering ordering) const;

  /// "s(0->2)" or "d(0 1->2 3)".
  std::string to_string() const;

  /// Singles before doubles, then lexicographic on (from, to).
  auto operator<=>(const ExcitationOperator&) const = default;

 private:
  Kind kind_ = Kind::kSingle;
  std::array<int, 2> from_{0, 0};
  std::array<int, 2> to_{0, 0};
};

/// Action of T on one basis configuration: T|x> = sign |target>, or zero.
struct GeneratorAction {
  Bits target = 0;
  int sign = 0;  // 0 when T annihilates x
};

inline GeneratorAction apply_generator(const ExcitationOperator& op, Bits x) {
  const Bits from = op.from_mask();
  const Bits to = op.to_mask();
  const Bits flip = from | to;
  if ((x & from) == from && (x & to) == 0) return {x ^ flip, +1};
  if ((x & to) == to && (x & from) == 0) return {x ^ flip, -1};
  return {};
}

}  // namespace hyperion::sv
