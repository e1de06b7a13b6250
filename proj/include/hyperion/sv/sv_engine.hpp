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

#include "hyperion/chem/pauli.hpp"
#include "hyperion/ci/ci_basis.hpp"
#include "hyperion/sparse/csr_matrix.hpp"
#include "hyperion/sparse/kernels.hpp"
#include "hyperion/sv/excitation.hpp"

namespace hyperion::sv {

/// A state restricted to a CI sector. The basis must outlive the state.
struct SvState {
  const ci::CiBasis* basis = nullptr;
  sparse::SparseVector vec;

  std::size_t nnz() const { return vec.nnz(); }
  static SvState from_configuration(const ci::CiBasis& basis, const ci::Configuration& c);
};

struct AnsatzElement {
  ExcitationOperator op;
  double theta = 0.0;
};

/// Matrix of `h` restricted to `basis`, built row by row from the bit action
/// of each Pauli word. Contributions that leave the sector must cancel per
/// target (|sum| <= 1e-10), otherwise the Hamiltonian is not sector
/// preserving and ContractError is thrown.
sparse::CsrMatrix assemble_subspace_hamiltonian(const chem::PauliSum& h, const ci::CiBasis& basis,
                                                unsigned workers = 0);

/// <s| m |s>.
double expectation(const sparse::CsrMatrix& m, const SvState& s, unsigned workers = 0);

/// T_op |s>, without renormalisation.
SvState apply_generator(const ExcitationOperator& op, const SvState& s);

/// exp(theta T_op) |s> via the closed form valid for T^3 = -T.
SvState apply_qeb_exponential(const ExcitationOperator& op, double theta, const SvState& s);

/// Applies the ansatz elements in order.
SvState prepare_state(std::span<const AnsatzElement> ansatz, const SvState& reference);

/// dE/dtheta at theta = 0 for appending exp(theta T_op): 2 <H s, T_op s>.
double pool_gradient(const sparse::CsrMatrix& m, const SvState& s, const ExcitationOperator& op,
                     unsigned workers = 0);

/// pool_gradient for every op, sharing one H|s> product. Results in `ops` order.
std::vector<double> pool_gradients(const sparse::CsrMatrix& m, const SvState& s,
                                   std::span<const ExcitationOperator> ops, unsigned workers = 0);

/// Same, given a precomputed H|s>.
std::vector<double> pool_gradients_from(const sparse::SparseVector& h_s, const SvState& s,
                                        std::span<const ExcitationOperator> ops, unsigned workers = 0);

}  // namespace hyperion::sv
