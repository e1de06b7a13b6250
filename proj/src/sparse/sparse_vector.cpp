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

#include "hyperion/sparse/sparse_vector.hpp"

#include <algorithm>
#include <cmath>

namespace hyperion::sparse {

SparseVector::SparseVector(std::size_t dim, std::vector<Index> indices, std::vector<double> values)
    : dim_(dim), indices_(std::move(indices)), values_(std::move(values)) {
  if (indices_.size() != values_.size()) throw ContractError("SparseVector: index/value length mismatch");
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] >= dim_) throw ContractError("SparseVector: index out of range");
    if (k > 0 && indices_[k] <= indices_[k - 1]) throw ContractError("SparseVector: indices not ascending");
    if (!std::isfinite(values_[k])) throw ContractError("SparseVector: non-finite amplitude");
  }
}

SparseVector SparseVector::from_unsorted(std::size_t dim, std::vector<std::pair<Index, double>> entries,
                                         double prune) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out(dim);
  out.indices_.reserve(entries.size());
  out.values_.reserve(entries.size());
  std::size_t k = 0;
  while (k < entries.size()) {
    Index idx = entries[k].first;
    if (idx >= dim) throw ContractError("SparseVector: index out of range");
    double sum = 0.0;
    for (; k < entries.size() && entries[k].first == idx; ++k) sum += entries[k].second;
    if (std::abs(sum) > prune) {
      out.indices_.push_back(idx);
      out.values_.push_back(sum);
    }
  }
  return out;
}

SparseVector SparseVector::from_dense(std::span<const double> dense, double prune) {
  SparseVector out(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (std::abs(dense[i]) > prune) {
      out.indices_.push_back(static_cast<Index>(i));
      out.values_.push_back(dense[i]);
    }
  return out;
}

SparseVector SparseVector::unit(std::size_t dim, Index position) {
  return SparseVector(dim, {position}, {1.0});
}

double SparseVector::at(Index position) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), position);
  if (it == indices_.end() || *it != position) return 0.0;
  return values_[static_cast<std::size_t>(it - indices_.begin())];
}

double SparseVector::norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s);
}

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> out(dim_, 0.0);
  for (std::size_t k = 0; k < indices_.size(); ++k) out[indices_[k]] = values_[k];
  return out;
}

}  // namespace hyperion::sparse
