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

#include "hyperion/mps/tensor_train.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperion::mps {

Core Core::from_left_unfolding(const Eigen::MatrixXd& m, Eigen::Index left, Eigen::Index phys) {
  Core c(left, phys, m.cols());
  c.left_unfolding() = m;
  return c;
}

Core Core::from_right_unfolding(const Eigen::MatrixXd& m, Eigen::Index phys, Eigen::Index right) {
  Core c(m.rows(), phys, right);
  c.right_unfolding() = m;
  return c;
}

void TruncationLog::record(int site, double tail_norm) {
  auto& slot = by_key_[{iteration_, site}];
  slot += tail_norm;
  running_max_ = std::max(running_max_, slot);
}

void TruncationLog::merge(const TruncationLog& other) {
  for (const auto& [key, tail] : other.by_key_) {
    auto& slot = by_key_[key];
    slot += tail;
    running_max_ = std::max(running_max_, slot);
  }
}

double TruncationLog::max_for_iteration(int iteration) const {
  double out = 0.0;
  for (auto it = by_key_.lower_bound({iteration, -1}); it != by_key_.end() && it->first.first == iteration; ++it)
    out = std::max(out, it->second);
  return out;
}

std::vector<TruncationRecord> TruncationLog::rows() const {
  std::vector<TruncationRecord> out;
  out.reserve(by_key_.size());
  double running = 0.0;
  for (const auto& [key, tail] : by_key_) {
    running = std::max(running, tail);
    out.push_back({key.first, key.second, tail, running});
  }
  return out;
}

Eigen::Index max_bond(const Train& t) {
  Eigen::Index out = 1;
  for (const auto& c : t) out = std::max(out, c.right);
  return out;
}

void left_orthogonalize(Train& t, std::size_t k) {
  if (k + 1 >= t.size()) throw ContractError("left_orthogonalize: no site to the right");
  Core& c = t[k];
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(c.left_unfolding());
  const Eigen::Index rows = c.left * c.phys;
  const Eigen::Index m = std::min(rows, c.right);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(rows, m);
  Eigen::MatrixXd r = qr.matrixQR().topRows(m).triangularView<Eigen::Upper>();
  Core& next = t[k + 1];
  Eigen::MatrixXd moved = r * next.right_unfolding();
  Eigen::Index phys = c.phys;
  t[k] = Core::from_left_unfolding(q, c.left, phys);
  t[k + 1] = Core::from_right_unfolding(moved, next.phys, next.right);
}

void right_orthogonalize(Train& t, std::size_t k) {
  if (k == 0 || k >= t.size()) throw ContractError("right_orthogonalize: no site to the left");
  Core& c = t[k];
  Eigen::MatrixXd transposed = c.right_unfolding().transpose();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(transposed);
  const Eigen::Index rows = transposed.rows();
  const Eigen::Index m = std::min(rows, c.left);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(rows, m);
  Eigen::MatrixXd r = qr.matrixQR().topRows(m).triangularView<Eigen::Upper>();
  Core& prev = t[k - 1];
  Eigen::MatrixXd moved = prev.left_unfolding() * r.transpose();
  Eigen::Index phys = c.phys, right = c.right;
  t[k] = Core::from_right_unfolding(q.transpose(), phys, right);
  t[k - 1] = Core::from_left_unfolding(moved, prev.left, prev.phys);
}

void canonicalize(Train& t, std::size_t center) {
  if (center >= t.size()) throw ContractError("canonicalize: center out of range");
  for (std::size_t k = 0; k < center; ++k) left_orthogonalize(t, k);
  for (std::size_t k = t.size() - 1; k > center; --k) right_orthogonalize(t, k);
}

void move_center(Train& t, int from, std::size_t to) {
  if (to >= t.size()) throw ContractError("move_center: target out of range");
  if (from < 0 || static_cast<std::size_t>(from) >= t.size()) {
    canonicalize(t, to);
    return;
  }
  for (std::size_t k = static_cast<std::size_t>(from); k < to; ++k) left_orthogonalize(t, k);
  for (std::size_t k = static_cast<std::size_t>(from); k > to; --k) right_orthogonalize(t, k);
}

std::pair<Eigen::Index, double> choose_rank(const Eigen::VectorXd& s, double threshold) {
  Eigen::Index keep = s.size();
  if (keep == 0) return {0, 0.0};
  const double floor = 1e-14 * s(0);
  const double limit = std::max(threshold, floor);
  const double limit2 = limit * limit;
  double tail2 = 0.0;
  double logged2 = 0.0;
  while (keep > 1) {
    const double sk = s(keep - 1);
    double next = tail2 + sk * sk;
    if (next > limit2) break;
    tail2 = next;
    if (sk >= floor) logged2 += sk * sk;
    --keep;
  }
  return {keep, std::sqrt(logged2)};
}

void round(Train& t, const TruncationPolicy& policy, TruncationLog* log) {
  if (policy.delta < 0) throw ContractError("round: delta must be >= 0");
  const std::size_t n = t.size();
  if (n == 0) return;
  for (std::size_t k = 0; k + 1 < n; ++k) left_orthogonalize(t, k);
  if (n == 1) return;
  double threshold = policy.delta;
  if (policy.mode == TruncationPolicy::Mode::kRelative)
    threshold = policy.delta * t[n - 1].data.norm() / std::sqrt(static_cast<double>(n - 1));
  for (std::size_t k = n - 1; k > 0; --k) {
    Core& c = t[k];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c.right_unfolding(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& s = svd.singularValues();
    auto [keep, tail] = choose_rank(s, threshold);
    if (policy.bond_cap > 0 && keep > policy.bond_cap)
      throw BondCapExceeded("bond " + std::to_string(k - 1) + " needs rank " + std::to_string(keep) +
                            " above the cap of " + std::to_string(policy.bond_cap));
    if (log) log->record(static_cast<int>(k - 1), tail);
    Eigen::MatrixXd vt = svd.matrixV().leftCols(keep).transpose();
    Eigen::MatrixXd us = svd.matrixU().leftCols(keep) * s.head(keep).asDiagonal();
    Core& prev = t[k - 1];
    Eigen::MatrixXd moved = prev.left_unfolding() * us;
    Eigen::Index phys = c.phys, right = c.right;
    t[k] = Core::from_right_unfolding(vt, phys, right);
    t[k - 1] = Core::from_left_unfolding(moved, prev.left, prev.phys);
  }
}

Train direct_sum(const Train& a, const Train& b) {
  if (a.size() != b.size() || a.empty()) throw ContractError("direct_sum: trains differ in length");
  const std::size_t n = a.size();
  Train out(n);
  if (n == 1) {
    out[0] = a[0];
    out[0].data += b[0].data;
    return out;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Core& ca = a[k];
    const Core& cb = b[k];
    if (ca.phys != cb.phys) throw ContractError("direct_sum: physical dimensions differ");
    const bool first = k == 0, last = k + 1 == n;
    Core c(first ? 1 : ca.left + cb.left, ca.phys, last ? 1 : ca.right + cb.right);
    const Eigen::Index lo = first ? 0 : ca.left;
    const Eigen::Index ro = last ? 0 : ca.right;
    for (Eigen::Index s = 0; s < ca.phys; ++s) {
      for (Eigen::Index j = 0; j < ca.right; ++j)
        for (Eigen::Index i = 0; i < ca.left; ++i) c(i, s, j) = ca(i, s, j);
      for (Eigen::Index j = 0; j < cb.right; ++j)
        for (Eigen::Index i = 0; i < cb.left; ++i) c(lo + i, s, ro + j) += cb(i, s, j);
    }
    out[k] = std::move(c);
  }
  return out;
}

double train_norm(const Train& t) {
  // Left environment: rho = sum_s A_s^T rho A_s.
  Eigen::MatrixXd rho = Eigen::MatrixXd::Ones(1, 1);
  for (const auto& c : t) {
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(c.right, c.right);
    for (Eigen::Index s = 0; s < c.phys; ++s) next.noalias() += c.slice(s).transpose() * rho * c.slice(s);
    rho = std::move(next);
  }
  return std::sqrt(std::max(0.0, rho(0, 0)));
}

void validate(const Train& t, Eigen::Index phys) {
  if (t.empty()) throw ContractError("tensor train has no sites");
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Core& c = t[k];
    if (c.phys != phys) throw ContractError("core " + std::to_string(k) + " has the wrong physical dimension");
    if (c.data.size() != c.left * c.phys * c.right) throw ContractError("core " + std::to_string(k) + " size mismatch");
    if (k == 0 && c.left != 1) throw ContractError("left boundary rank must be 1");
    if (k + 1 == t.size() && c.right != 1) throw ContractError("right boundary rank must be 1");
    if (k > 0 && t[k - 1].right != c.left) throw ContractError("bond " + std::to_string(k - 1) + " shape mismatch");
    if (!c.data.allFinite()) throw ContractError("core " + std::to_string(k) + " has non-finite entries");
  }
}

}  // namespace hyperion::mps
