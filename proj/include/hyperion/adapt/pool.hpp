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

#include <vector>

#include "hyperion/ci/configuration.hpp"
#include "hyperion/sv/excitation.hpp"

namespace hyperion::adapt {

/// QEB operator pool over the Hartree-Fock reference: every same-spin single
/// occupied -> virtual and every occupied pair -> virtual pair with equal
/// total S_z. Sorted (singles first, then by indices); no duplicates.
std::vector<sv::ExcitationOperator> build_qeb_pool(int n_qubits, int n_alpha, int n_beta,
                                                   ci::SpinOrdering ordering = ci::SpinOrdering::kInterleaved);

/// Same with n_alpha = ceil(n_electrons / 2).
std::vector<sv::ExcitationOperator> build_qeb_pool(int n_qubits, int n_electrons,
                                                   ci::SpinOrdering ordering = ci::SpinOrdering::kInterleaved);

}  // namespace hyperion::adapt
