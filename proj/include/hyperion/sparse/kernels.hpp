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

#include "hyperion/sparse/csr_matrix.hpp"
#include "hyperion/sparse/sparse_vector.hpp"

namespace hyperion::sparse {

/// y = m v. Rows are block-partitioned over `workers` (0 = all cores) while
/// v is visible to every worker; per-block results are concatenated in row
/// order, so the output does not depend on the worker count. Entries with
/// |y_i| <= prune are omitted.
SparseVector spmspv(const CsrMatrix& m, const SparseVector& v, double prune = 0.0, unsigned workers = 0);

/// Merge-join inner product.
double dot(const SparseVector& u, const SparseVector& v);

/// a x + y. Exact cancellations are removed.
SparseVector axpy(double a, const SparseVector& x, const SparseVector& y);
SparseVector scale(double a, const SparseVector& x);
/// Unit 2-norm copy; throws ContractError when the norm is <= 1e-300.
SparseVector normalize(const SparseVector& x);

}  // namespace hyperion::sparse
