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

#include <Eigen/Dense>
#include <map>
#include <utility>
#include <vector>

#include "hyperion/common.hpp"

namespace hyperion::mps {

/// Third-order tensor train core of shape left x phys x right, stored so
/// that element (l, s, r) sits at l + left * (s + phys * r). Both unfoldings
/// (left*phys x right and left x phys*right) are then plain column-major
/// views of the same buffer.
struct Core {
  Eigen::Index left = 1;
  Eigen::Index phys = 2;
  Eigen::Index right = 1;
  Eigen::VectorXd data = Eigen::VectorXd::Zero(2);

  Core() = default;
  Core(Eigen::Index l, Eigen::Index s, Eigen::Index r) : left(l), phys(s), right(r), data(Eigen::VectorXd::Zero(l * s * r)) {}

  double& operator()(Eigen::Index l, Eigen::Index s, Eigen::Index r) { return data[l + left * (s + phys * r)]; }
  double operator()(Eigen::Index l, Eigen::Index s, Eigen::Index r) const { return data[l + left * (s + phys * r)]; }

  Eigen::Map<Eigen::MatrixXd> left_unfolding() { return {data.data(), left * phys, right}; }
  Eigen::Map<const Eigen::MatrixXd> left_unfolding() const { return {data.data(), left * phys, right}; }
  Eigen::Map<Eigen::MatrixXd> right_unfolding() { return {data.data(), left, phys * right}; }
  Eigen::Map<const Eigen::MatrixXd> right_unfolding() const { return {data.data(), left, phys * right}; }

  using Slice = Eigen::Map<const Eigen::MatrixXd, 0, Eigen::OuterStride<>>;
  /// The left x right matrix at physical index s.
  Slice slice(Eigen::Index s) const { return {data.data() + left * s, left, right, Eigen::OuterStride<>(left * phys)}; }

  static Core from_left_unfolding(const Eigen::MatrixXd& m, Eigen::Index left, Eigen::Index phys);
  static Core from_right_unfolding(const Eigen::MatrixXd& m, Eigen::Index phys, Eigen::Index right);
};

using Train = std::vector<Core>;

/// Per-bond truncation rule. In absolute mode the 2-norm of the discarded
/// singular values at each bond is at most `delta`; in relative mode the
/// threshold is delta * ||A|| / sqrt(n - 1). Singular values below 1e-14 of
/// the largest one are always discarded.
struct TruncationPolicy {
  enum class Mode { kAbsolute, kRelative };
  double delta = 0.0;
  Mode mode = Mode::kAbsolute;
  /// Bond dimensions above this raise BondCapExceeded; 0 disables the check.
  Eigen::Index bond_cap = 256;
};

struct TruncationRecord {
  int iteration = 0;
  int site = 0;  // bond between site and site + 1
  double tail_norm = 0.0;
  double running_max = 0.0;
};

/// Discarded-tail norms summed per (iteration, bond) over every truncating
/// contraction logged under that iteration. Each entry bounds the error
/// that iteration's contractions introduced at that bond.
class TruncationLog {
 public:
  /// Iteration tag applied to subsequent records.
  void set_iteration(int iteration) { iteration_ = iteration; }
  int iteration() const { return iteration_; }

  void record(int site, double tail_norm);
  void merge(const TruncationLog& other);

  /// Largest accumulated (iteration, bond) entry so far.
  double running_max() const { return running_max_; }
  /// Largest accumulated entry under one iteration tag (0 when none).
  double max_for_iteration(int iteration) const;
  /// Rows ordered by (iteration, site) with the running max up to each row.
  std::vector<TruncationRecord> rows() const;
  bool empty() const { return by_key_.empty(); }

 private:
  int iteration_ = 0;
  double running_max_ = 0.0;
  std::map<std::pair<int, int>, double> by_key_;
};

/// Largest internal bond of a train.
Eigen::Index max_bond(const Train& t);

/// QR step moving orthogonality from site k to k + 1.
void left_orthogonalize(Train& t, std::size_t k);
/// LQ step moving orthogonality from site k to k - 1.
void right_orthogonalize(Train& t, std::size_t k);
/// Sites left of `center` left-orthogonal, right of it right-orthogonal.
void canonicalize(Train& t, std::size_t center);
/// Moves the orthogonality centre from `from` to `to`; a negative `from`
/// means no known centre and triggers a full canonicalisation.
void move_center(Train& t, int from, std::size_t to);

/// Number of singular values kept and the discarded tail norm under the
/// given absolute threshold. Values below the 1e-14 * s_max floor are
/// dropped but do not count towards the returned tail.
std::pair<Eigen::Index, double> choose_rank(const Eigen::VectorXd& singular_values, double threshold);

/// TT-rounding: left-to-right QR sweep, then right-to-left truncated SVD
/// sweep. The result is right-orthogonal with the norm carried by site 0.
/// Tails go to `log` when given. Throws BondCapExceeded.
void round(Train& t, const TruncationPolicy& policy, TruncationLog* log = nullptr);

/// a + b as tensor trains of equal length and physical dimension; bond
/// dims add.
Train direct_sum(const Train& a, const Train& b);

/// Frobenius norm of the full tensor.
double train_norm(const Train& t);

/// Checks shapes and finiteness; throws ContractError.
void validate(const Train& t, Eigen::Index phys);

}  // namespace hyperion::mps
