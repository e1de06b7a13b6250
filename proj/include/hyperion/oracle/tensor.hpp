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

#include "hyperion/mps/mpo.hpp"
#include "hyperion/oracle/dense.hpp"

namespace hyperion::oracle {

/// All 2^n amplitudes of an MPS by explicit summation over bond indices
/// (n <= 14).
DenseVector dense_from_mps(const mps::MpsState& s);

/// Full 2^n x 2^n matrix of an MPO (n <= 10).
DenseMatrix dense_from_mpo(const mps::Mpo& m);

/// Sum of dense_from_mpo over the parts.
DenseMatrix dense_from_batch(const mps::MpoBatch& b);

}  // namespace hyperion::oracle
