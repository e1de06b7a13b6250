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

#include "hyperion/mps/mps.hpp"

#include <cmath>

namespace hyperion::mps {

std::vector<Eigen::Index> MpsState::bond_dims() const {
  std::vector<Eigen::Index> out;
  out.reserve(cores.size() + 1);
  out.push_back(cores.empty() ? 1 : cores.front().left);
  for (const auto& c : cores) out.push_back(c.right);
  return out;
}

MpsState from_configuration(const ci::Configuration& c) {
  if (c.n_qubits <= 0) throw ContractError("from_configuration: no qubits");
  MpsState s;
  s.cores.reserve(static_cast<std::size_t>(c.n_qubits));
  for (int k = 0; k < c.n_qubits; ++k) {
    Core core(1, 2, 1);
    core(0, c.occupied(k) ? 1 : 0, 0) = 1.0;
    s.cores.push_back(std::move(core));
  }
  s.canonical_center = 0;
  return s;
}

MpsState from_dense(std::span<const double> amplitudes, int n_qubits, const TruncationPolicy& policy) {
  if (n_qubits <= 0 || n_qubits > 30 || amplitudes.size() != (std::size_t{1} << n_qubits))
    throw ContractError("from_dense: amplitude count must be 2^n_qubits");
  MpsState s;
  Eigen::MatrixXd rest = Eigen::Map<const Eigen::MatrixXd>(amplitudes.data(), 1, static_cast<Eigen::Index>(amplitudes.size()));
  Eigen::Index left = 1;
  for (int k = 0; k + 1 < n_qubits; ++k) {
    Eigen::Map<Eigen::MatrixXd> m(rest.data(), left * 2, rest.size() / (left * 2));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    auto [keep, tail] = choose_rank(svd.singularValues(), policy.delta);
    (void)tail;
    if (policy.bond_cap > 0 && keep > policy.bond_cap) throw BondCapExceeded("from_dense: bond cap exceeded");
    s.cores.push_back(Core::from_left_unfolding(svd.matrixU().leftCols(keep), left, 2));
    Eigen::MatrixXd next = svd.singularValues().head(keep).asDiagonal() * svd.matrixV().leftCols(keep).transpose();
    rest = std::move(next);
    left = keep;
  }
  s.cores.push_back(Core::from_left_unfolding(Eigen::Map<Eigen::MatrixXd>(rest.data(), left * 2, 1), left, 2));
  s.canonical_center = n_qubits - 1;
  return s;
}

MpsState canonicalize(const MpsState& s, int center) {
  if (center < 0 || center >= s.n_qubits()) throw ContractError("canonicalize: center out of range");
  MpsState out = s;
  canonicalize(out.cores, static_cast<std::size_t>(center));
  out.canonical_center = center;
  return out;
}

MpsState tt_round(const MpsState& s, const TruncationPolicy& policy, TruncationLog* log) {
  validate(s.cores, 2);
  MpsState out = s;
  round(out.cores, policy, log);
  out.canonical_center = 0;
  return out;
}

double inner(const MpsState& a, const MpsState& b) {
  if (a.n_qubits() != b.n_qubits()) throw ContractError("inner: qubit counts differ");
  Eigen::MatrixXd rho = Eigen::MatrixXd::Ones(1, 1);
  for (std::size_t k = 0; k < a.cores.size(); ++k) {
    const Core& ca = a.cores[k];
    const Core& cb = b.cores[k];
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(ca.right, cb.right);
    for (Eigen::Index s = 0; s < 2; ++s) next.noalias() += ca.slice(s).transpose() * (rho * cb.slice(s));
    rho = std::move(next);
  }
  return rho(0, 0);
}

double norm(const MpsState& s) {
  if (s.canonical_center >= 0) return s.cores[static_cast<std::size_t>(s.canonical_center)].data.norm();
  return train_norm(s.cores);
}

MpsState scaled(const MpsState& s, double factor) {
  MpsState out = s;
  std::size_t k = out.canonical_center >= 0 ? static_cast<std::size_t>(out.canonical_center) : 0;
  out.cores[k].data *= factor;
  return out;
}

MpsState normalized(const MpsState& s) {
  double nrm = norm(s);
  if (!(nrm > 1e-300)) throw ContractError("normalized: zero state");
  return scaled(s, 1.0 / nrm);
}

MpsState add(const MpsState& a, const MpsState& b) {
  if (a.n_qubits() != b.n_qubits()) throw ContractError("add: qubit counts differ");
  return {direct_sum(a.cores, b.cores), -1};
}

}  // namespace hyperion::mps
