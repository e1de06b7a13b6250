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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hyperion/common.hpp"

namespace hyperion::sparse {

using Index = std::uint32_t;

/// Real vector over a subspace of dimension `dim`, stored as index-ascending
/// (position, amplitude) pairs.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}

  /// Entries must already be strictly ascending and < dim.
  SparseVector(std::size_t dim, std::vector<Index> indices, std::vector<double> values);

  /// Sorts, sums duplicates and drops entries with |x| <= prune.
  static SparseVector from_unsorted(std::size_t dim, std::vector<std::pair<Index, double>> entries,
                                    double prune = 0.0);
  static SparseVector from_dense(std::span<const double> dense, double prune = 0.0);
  static SparseVector unit(std::size_t dim, Index position);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const std::vector<Index>& indices() const { return indices_; }
  const std::vector<double>& values() const { return values_; }

  /// Amplitude at `position` (0 when not stored).
  double at(Index position) const;
  double norm() const;
  std::vector<double> to_dense() const;

  bool operator==(const SparseVector&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Index> indices_;
  std::vector<double> values_;
};

}  // namespace hyperion::sparse
