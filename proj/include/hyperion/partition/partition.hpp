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

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperion/chem/pauli.hpp"
#include "hyperion/ci/ci_basis.hpp"
#include "hyperion/mps/mpo.hpp"
#include "hyperion/sparse/csr_matrix.hpp"
#include "hyperion/sv/sv_engine.hpp"

namespace hyperion::partition {

/// Boundary group key (level i, cut index l), both 1-based.
using GroupKey = std::pair<int, int>;

struct BoundaryGroup {
  chem::PauliSum terms;
  mps::MpoBatch mpo;
};

/// Split of a Pauli-sum Hamiltonian into terms local to one level-eta block
/// (evaluated exactly on the sparse state) and block-crossing terms grouped
/// by the level and cut they first cross (evaluated on the MPS).
struct PartitionedHamiltonian {
  int n_qubits = 0;
  int eta = 1;
  int block_size = 0;
  chem::PauliSum local_terms;
  std::map<GroupKey, BoundaryGroup> boundary_groups;
  sparse::CsrMatrix local_csr;  // empty until compiled against a basis
  bool has_local_csr = false;

  std::size_t boundary_term_count() const;
};

struct PartitionOptions {
  double mpo_delta = 1e-14;
  Eigen::Index mpo_cap = 100;
  /// When set, local_csr is assembled over this basis.
  const ci::CiBasis* basis = nullptr;
  unsigned workers = 0;
};

/// Level and cut of a support mask, or nullopt when it fits in one
/// level-eta block. The identity word counts as local.
std::optional<GroupKey> classify_support(Bits support, int n_qubits, int eta);

/// Requires 2^eta to divide n_qubits and a non-empty Hamiltonian.
PartitionedHamiltonian partition(const chem::PauliSum& h, int eta, int n_qubits, const PartitionOptions& options = {});

/// Paired exact sparse state and compressed MPS receiving the same gates.
struct DualState {
  sv::SvState sv;
  mps::MpsState mps;
};

DualState dual_from_configuration(const ci::CiBasis& basis, const ci::Configuration& c);

/// <sv| H_local |sv> + sum over groups of <mps| B |mps>.
double expectation_partitioned(const PartitionedHamiltonian& ph, const DualState& d, unsigned workers = 0);
/// Boundary contribution alone.
double boundary_expectation(const PartitionedHamiltonian& ph, const mps::MpsState& s, unsigned workers = 1);

/// Exact update of the sparse half, gate MPO plus zip-up (then
/// renormalisation) on the MPS half.
DualState apply_ansatz_dual(const sv::ExcitationOperator& op, double theta, const DualState& d,
                            const mps::TruncationPolicy& policy, mps::TruncationLog* log = nullptr);

/// 2 <H psi, T psi> split additively: local part on the sparse state,
/// boundary part on the MPS.
double pool_gradient_partitioned(const PartitionedHamiltonian& ph, const DualState& d, const sv::ExcitationOperator& op);

/// Every boundary MPO part applied to the MPS once (zip-up under `policy`),
/// for reuse across many pool operators.
std::vector<mps::MpsState> boundary_images(const PartitionedHamiltonian& ph, const mps::MpsState& s,
                                           const mps::TruncationPolicy& policy, unsigned workers = 0);

/// Gradients of all ops, reusing H_local|sv> and the boundary images.
std::vector<double> pool_gradients_partitioned(const PartitionedHamiltonian& ph, const DualState& d,
                                               std::span<const sv::ExcitationOperator> ops,
                                               const mps::TruncationPolicy& policy, unsigned workers = 0);

/// sum over images of 2 <image| T_op |s>.
double mps_gradient_from_images(std::span<const mps::MpsState> images, const mps::MpsState& s,
                                const sv::ExcitationOperator& op);

}  // namespace hyperion::partition
