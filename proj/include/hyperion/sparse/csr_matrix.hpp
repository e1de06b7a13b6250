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
#include <vector>

#include "hyperion/sparse/sparse_vector.hpp"

namespace hyperion::sparse {

/// Compressed sparse row matrix; column indices ascend within each row.
struct CsrMatrix {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<std::uint64_t> row_offsets{0};
  std::vector<Index> col_indices;
  std::vector<double> values;

  std::size_t nnz() const { return values.size(); }

  static CsrMatrix identity(std::size_t n, double scale = 1.0);
  /// Builds from a row-major dense matrix, keeping entries with |x| > drop.
  static CsrMatrix from_dense(std::size_t n_rows, std::size_t n_cols, const std::vector<double>& dense,
                              double drop = 0.0);

  /// Throws ContractError when the layout invariants do not hold.
  void validate() const;
  bool is_symmetric(double tolerance = 1e-12) const;
  std::vector<double> to_dense() const;
};

}  // namespace hyperion::sparse
