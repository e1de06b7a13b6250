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

#include "hyperion/chem/pauli.hpp"
#include "hyperion/mps/mps.hpp"
#include "hyperion/sv/excitation.hpp"

namespace hyperion::mps {

/// Matrix product operator. Core k has physical index p = out + 2 * in for
/// qubit k, so each core is left x 4 x right.
struct Mpo {
  Train cores;

  int n_qubits() const { return static_cast<int>(cores.size()); }
  Eigen::Index max_bond() const { return mps::max_bond(cores); }
};

/// Sum of MPOs, each with max bond <= cap.
struct MpoBatch {
  std::vector<Mpo> parts;
  Eigen::Index cap = 100;

  Eigen::Index max_bond() const;
};

Mpo identity_mpo(int n_qubits, double scale = 1.0);
/// Rank-1 MPO of coefficient * word.
Mpo mpo_from_word(const chem::PauliWord& word, double coefficient);
/// a + b by direct sum (bond dims add).
Mpo mpo_add(const Mpo& a, const Mpo& b);
/// TT-rounding of an MPO; throws BondCapExceeded when policy.bond_cap is hit.
Mpo mpo_round(const Mpo& m, const TruncationPolicy& policy);

/// Greedy batching: terms are summed into the current part by direct sum
/// and rounded at `delta`; a new part starts whenever the rounded part would
/// exceed `cap`.
MpoBatch mpo_from_pauli_sum(const chem::PauliSum& h, double delta = 1e-14, Eigen::Index cap = 100);

/// Exact MPO of exp(theta T_op) on n_qubits: the dense operator on the
/// support is split by SVD and intervening sites carry identity. Bond dims
/// stay <= 5 for QEB singles and doubles.
Mpo qeb_exponential_mpo(const sv::ExcitationOperator& op, double theta, int n_qubits);
/// MPO of the generator T_op itself (bond dims <= 2).
Mpo qeb_generator_mpo(const sv::ExcitationOperator& op, int n_qubits);

/// Zip-up application of m to s: the input is brought to canonical form at
/// site 0, then one left-to-right sweep contracts and truncates with `policy`
/// at every bond, followed by a right-to-left QR sweep. No renormalisation.
MpsState apply_mpo_zipup(const Mpo& m, const MpsState& s, const TruncationPolicy& policy,
                         TruncationLog* log = nullptr);

/// <a| m |b> by left-to-right environment contraction.
double sandwich(const MpsState& a, const Mpo& m, const MpsState& b);
/// Sum over parts of <s| part |s>.
double expectation(const MpoBatch& h, const MpsState& s, unsigned workers = 1);
double expectation(const Mpo& m, const MpsState& s);

}  // namespace hyperion::mps
