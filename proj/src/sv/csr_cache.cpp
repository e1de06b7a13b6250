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

#include "hyperion/sv/csr_cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "hyperion/common.hpp"

namespace hyperion::sv {

static_assert(std::endian::native == std::endian::little, "CSR cache I/O assumes a little-endian host");

namespace {

constexpr char kMagic[6] = {'H', 'Y', 'P', 'C', 'S', 'R'};

template <class T>
void put(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
void put_all(std::ofstream& out, const std::vector<T>& v) {
  out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <class T>
T get(std::ifstream& in, const std::filesystem::path& path) {
  T v{};
  if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) throw ParseError("truncated CSR cache: " + path.string());
  return v;
}

template <class T>
void get_all(std::ifstream& in, std::vector<T>& v, std::uint64_t n, const std::filesystem::path& path) {
  v.resize(n);
  if (!in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(T))))
    throw ParseError("truncated CSR cache: " + path.string());
}

}  // namespace

void write_csr_cache(const sparse::CsrMatrix& m, const std::filesystem::path& path) {
  m.validate();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(kMagic, sizeof(kMagic));
  put(out, kCsrCacheVersion);
  put<std::uint64_t>(out, m.n_rows);
  put<std::uint64_t>(out, m.n_cols);
  put<std::uint64_t>(out, m.nnz());
  put_all(out, m.row_offsets);
  put_all(out, m.col_indices);
  put_all(out, m.values);
  if (!out) throw Error("write failed: " + path.string());
}

sparse::CsrMatrix read_csr_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open CSR cache " + path.string());
  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw ParseError("not a CSR cache: " + path.string());
  auto version = get<std::uint32_t>(in, path);
  if (version != kCsrCacheVersion)
    throw ParseError("unsupported CSR cache version " + std::to_string(version) + " in " + path.string());
  sparse::CsrMatrix m;
  m.n_rows = get<std::uint64_t>(in, path);
  m.n_cols = get<std::uint64_t>(in, path);
  auto nnz = get<std::uint64_t>(in, path);
  get_all(in, m.row_offsets, m.n_rows + 1, path);
  get_all(in, m.col_indices, nnz, path);
  get_all(in, m.values, nnz, path);
  try {
    m.validate();
  } catch (const ContractError& e) {
    throw ParseError("corrupt CSR cache " + path.string() + ": " + e.what());
  }
  return m;
}

}  // namespace hyperion::sv
