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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hyperion {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (FCIDUMP, config files, CSV).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operand violates the contract of the called operation.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A tensor-network state exceeded its configured bond-dimension cap.
class BondCapExceeded : public Error {
 public:
  using Error::Error;
};

using Bits = std::uint64_t;

inline int popcount(Bits b) { return __builtin_popcountll(b); }

/// Number of workers used by parallel kernels when the caller passes 0.
inline unsigned default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Splits [0, n) into at most `workers` contiguous blocks and runs
/// `body(block_index, begin, end)` for each. Blocks are ordered, so callers
/// can concatenate per-block results deterministically.
inline void parallel_blocks(std::size_t n, unsigned workers,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  if (workers == 0) workers = default_workers();
  std::size_t blocks = std::min<std::size_t>(workers, std::max<std::size_t>(n, 1));
  if (blocks <= 1) {
    body(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(blocks);
  std::vector<std::exception_ptr> errors(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t begin = n * b / blocks;
    std::size_t end = n * (b + 1) / blocks;
    pool.emplace_back([&, b, begin, end] {
      try {
        body(b, begin, end);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Number of blocks `parallel_blocks` will use for `n` items.
inline std::size_t block_count(std::size_t n, unsigned workers) {
  if (workers == 0) workers = default_workers();
  return std::max<std::size_t>(1, std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
}

}  // namespace hyperion
