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

#include "hyperion/oracle/tensor.hpp"

namespace hyperion::oracle {

namespace {

// Rows index the physical prefix (site 0 fastest), columns the open bond.
Eigen::MatrixXd contract_prefix(const mps::Train& t) {
  Eigen::MatrixXd acc = Eigen::MatrixXd::Ones(1, 1);
  for (const auto& c : t) {
    const Eigen::Index rows = acc.rows();
    Eigen::MatrixXd next(rows * c.phys, c.right);
    for (Eigen::Index p = 0; p < c.phys; ++p) next.middleRows(p * rows, rows) = acc * c.slice(p);
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

DenseVector dense_from_mps(const mps::MpsState& s) {
  const int n = s.n_qubits();
  if (n <= 0 || n > kMaxDenseQubits) throw ContractError("dense_from_mps: qubit count outside [1, 14]");
  return contract_prefix(s.cores).col(0);
}

DenseMatrix dense_from_mpo(const mps::Mpo& m) {
  const int n = m.n_qubits();
  if (n <= 0 || n > 10) throw ContractError("dense_from_mpo: qubit count outside [1, 10]");
  Eigen::VectorXd flat = contract_prefix(m.cores).col(0);
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseMatrix out(dim, dim);
  for (Eigen::Index p = 0; p < flat.size(); ++p) {
    Eigen::Index row = 0, col = 0;
    for (int k = 0; k < n; ++k) {
      Eigen::Index pk = (p >> (2 * k)) & 3;
      row |= (pk & 1) << k;
      col |= (pk >> 1) << k;
    }
    out(row, col) = flat(p);
  }
  return out;
}

DenseMatrix dense_from_batch(const mps::MpoBatch& b) {
  if (b.parts.empty()) throw ContractError("dense_from_batch: empty batch");
  DenseMatrix out = dense_from_mpo(b.parts.front());
  for (std::size_t i = 1; i < b.parts.size(); ++i) out += dense_from_mpo(b.parts[i]);
  return out;
}

}  // namespace hyperion::oracle
