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

#include <filesystem>

#include "hyperion/sparse/csr_matrix.hpp"

namespace hyperion::sv {

/// Binary CSR cache, little-endian:
///   "HYPCSR" u32 version, u64 n_rows, u64 n_cols, u64 nnz,
///   u64 row_offsets[n_rows + 1], u32 col_indices[nnz], f64 values[nnz].
inline constexpr std::uint32_t kCsrCacheVersion = 1;

void write_csr_cache(const sparse::CsrMatrix& m, const std::filesystem::path& path);
/// Throws ParseError on a bad magic, version, or truncated file.
sparse::CsrMatrix read_csr_cache(const std::filesystem::path& path);

}  // namespace hyperion::sv
