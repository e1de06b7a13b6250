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

#include "hyperion/sparse/kernels.hpp"

#include <cmath>

namespace hyperion::sparse {

SparseVector spmspv(const CsrMatrix& m, const SparseVector& v, double prune, unsigned workers) {
  if (m.n_cols != v.dim()) throw ContractError("spmspv: dimension mismatch");
  if (v.empty()) return SparseVector(m.n_rows);

  // Every worker reads the full input through a dense scatter.
  std::vector<double> x(v.dim(), 0.0);
  for (std::size_t k = 0; k < v.nnz(); ++k) x[v.indices()[k]] = v.values()[k];

  const std::size_t blocks = block_count(m.n_rows, workers);
  std::vector<std::vector<Index>> block_idx(blocks);
  std::vector<std::vector<double>> block_val(blocks);
  parallel_blocks(m.n_rows, workers, [&](std::size_t b, std::size_t begin, std::size_t end) {
    auto& idx = block_idx[b];
    auto& val = block_val[b];
    for (std::size_t i = begin; i < end; ++i) {
      double sum = 0.0;
      for (auto k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k) sum += m.values[k] * x[m.col_indices[k]];
      if (std::abs(sum) > prune) {
        idx.push_back(static_cast<Index>(i));
        val.push_back(sum);
      }
    }
  });

  std::size_t total = 0;
  for (const auto& b : block_idx) total += b.size();
  std::vector<Index> idx;
  std::vector<double> val;
  idx.reserve(total);
  val.reserve(total);
  for (std::size_t b = 0; b < blocks; ++b) {
    idx.insert(idx.end(), block_idx[b].begin(), block_idx[b].end());
    val.insert(val.end(), block_val[b].begin(), block_val[b].end());
  }
  return SparseVector(m.n_rows, std::move(idx), std::move(val));
}

double dot(const SparseVector& u, const SparseVector& v) {
  if (u.dim() != v.dim()) throw ContractError("dot: dimension mismatch");
  const auto& ui = u.indices();
  const auto& vi = v.indices();
  double sum = 0.0;
  std::size_t a = 0, b = 0;
  while (a < ui.size() && b < vi.size()) {
    if (ui[a] < vi[b]) {
      ++a;
    } else if (vi[b] < ui[a]) {
      ++b;
    } else {
      sum += u.values()[a] * v.values()[b];
      ++a;
      ++b;
    }
  }
  return sum;
}

SparseVector axpy(double a, const SparseVector& x, const SparseVector& y) {
  if (x.dim() != y.dim()) throw ContractError("axpy: dimension mismatch");
  std::vector<Index> idx;
  std::vector<double> val;
  idx.reserve(x.nnz() + y.nnz());
  val.reserve(x.nnz() + y.nnz());
  auto push = [&](Index i, double v) {
    if (v != 0.0) {
      idx.push_back(i);
      val.push_back(v);
    }
  };
  const auto& xi = x.indices();
  const auto& yi = y.indices();
  std::size_t p = 0, q = 0;
  while (p < xi.size() || q < yi.size()) {
    if (q == yi.size() || (p < xi.size() && xi[p] < yi[q])) {
      push(xi[p], a * x.values()[p]);
      ++p;
    } else if (p == xi.size() || yi[q] < xi[p]) {
      push(yi[q], y.values()[q]);
      ++q;
    } else {
      push(xi[p], a * x.values()[p] + y.values()[q]);
      ++p;
      ++q;
    }
  }
  return SparseVector(x.dim(), std::move(idx), std::move(val));
}

SparseVector scale(double a, const SparseVector& x) {
  if (a == 0.0) return SparseVector(x.dim());
  std::vector<double> val = x.values();
  for (double& v : val) v *= a;
  return SparseVector(x.dim(), x.indices(), std::move(val));
}

SparseVector normalize(const SparseVector& x) {
  double n = x.norm();
  if (!(n > 1e-300)) throw ContractError("normalize: zero-norm vector");
  return scale(1.0 / n, x);
}

}  // namespace hyperion::sparse
