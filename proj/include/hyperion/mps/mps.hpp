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

#include <span>
#include <vector>

#include "hyperion/ci/configuration.hpp"
#include "hyperion/mps/tensor_train.hpp"

namespace hyperion::mps {

/// Matrix product state over qubits; core k carries qubit k.
struct MpsState {
  Train cores;
  int canonical_center = -1;  // -1 when not canonical

  int n_qubits() const { return static_cast<int>(cores.size()); }
  Eigen::Index max_bond() const { return mps::max_bond(cores); }
  std::vector<Eigen::Index> bond_dims() const;
};

/// Product state of a basis configuration (all bonds 1).
MpsState from_configuration(const ci::Configuration& c);

/// Exact TT-SVD of a dense 2^n amplitude vector (index bit k = qubit k),
/// truncated per `policy`.
MpsState from_dense(std::span<const double> amplitudes, int n_qubits, const TruncationPolicy& policy = {});

MpsState canonicalize(const MpsState& s, int center);

/// TT-rounding; the result is canonical at site 0.
MpsState tt_round(const MpsState& s, const TruncationPolicy& policy, TruncationLog* log = nullptr);

double inner(const MpsState& a, const MpsState& b);
double norm(const MpsState& s);
/// Copy scaled to unit norm; throws ContractError on a zero state.
MpsState normalized(const MpsState& s);
MpsState scaled(const MpsState& s, double factor);

/// a + b by direct sum of cores (bond dims add).
MpsState add(const MpsState& a, const MpsState& b);

}  // namespace hyperion::mps
