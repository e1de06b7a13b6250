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

#include "hyperion/sparse/csr_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace hyperion::sparse {

CsrMatrix CsrMatrix::identity(std::size_t n, double scale) {
  CsrMatrix m;
  m.n_rows = m.n_cols = n;
  m.row_offsets.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) m.row_offsets[i] = i;
  m.col_indices.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.col_indices[i] = static_cast<Index>(i);
  m.values.assign(n, scale);
  return m;
}

CsrMatrix CsrMatrix::from_dense(std::size_t n_rows, std::size_t n_cols, const std::vector<double>& dense,
                                double drop) {
  if (dense.size() != n_rows * n_cols) throw ContractError("CsrMatrix::from_dense: size mismatch");
  CsrMatrix m;
  m.n_rows = n_rows;
  m.n_cols = n_cols;
  m.row_offsets.assign(1, 0);
  for (std::size_t i = 0; i < n_rows; ++i) {
    for (std::size_t j = 0; j < n_cols; ++j) {
      double v = dense[i * n_cols + j];
      if (std::abs(v) > drop) {
        m.col_indices.push_back(static_cast<Index>(j));
        m.values.push_back(v);
      }
    }
    m.row_offsets.push_back(m.values.size());
  }
  return m;
}

void CsrMatrix::validate() const {
  if (row_offsets.size() != n_rows + 1 || row_offsets.front() != 0 || row_offsets.back() != values.size() ||
      col_indices.size() != values.size())
    throw ContractError("CsrMatrix: inconsistent array lengths");
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (row_offsets[i + 1] < row_offsets[i]) throw ContractError("CsrMatrix: row offsets decrease");
    for (auto k = row_offsets[i]; k < row_offsets[i + 1]; ++k) {
      if (col_indices[k] >= n_cols) throw ContractError("CsrMatrix: column index out of range");
      if (k > row_offsets[i] && col_indices[k] <= col_indices[k - 1])
        throw ContractError("CsrMatrix: columns not strictly ascending within a row");
    }
  }
}

bool CsrMatrix::is_symmetric(double tolerance) const {
  if (n_rows != n_cols) return false;
  auto lookup = [this](std::size_t i, Index j) {
    auto begin = col_indices.begin() + static_cast<std::ptrdiff_t>(row_offsets[i]);
    auto end = col_indices.begin() + static_cast<std::ptrdiff_t>(row_offsets[i + 1]);
    auto it = std::lower_bound(begin, end, j);
    return (it != end && *it == j) ? values[static_cast<std::size_t>(it - col_indices.begin())] : 0.0;
  };
  for (std::size_t i = 0; i < n_rows; ++i)
    for (auto k = row_offsets[i]; k < row_offsets[i + 1]; ++k)
      if (std::abs(values[k] - lookup(col_indices[k], static_cast<Index>(i))) > tolerance) return false;
  return true;
}

std::vector<double> CsrMatrix::to_dense() const {
  std::vector<double> out(n_rows * n_cols, 0.0);
  for (std::size_t i = 0; i < n_rows; ++i)
    for (auto k = row_offsets[i]; k < row_offsets[i + 1]; ++k) out[i * n_cols + col_indices[k]] = values[k];
  return out;
}

}  // namespace hyperion::sparse
