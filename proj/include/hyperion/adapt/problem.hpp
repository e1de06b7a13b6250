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

#include "hyperion/chem/fcidump.hpp"
#include "hyperion/chem/pauli.hpp"
#include "hyperion/ci/ci_basis.hpp"

namespace hyperion::adapt {

/// Qubit Hamiltonian with its CI sector and Hartree-Fock reference.
struct Problem {
  chem::PauliSum hamiltonian;
  ci::CiBasis basis;
  ci::Configuration reference;
  ci::SpinOrdering ordering = ci::SpinOrdering::kInterleaved;
  int n_alpha = 0;
  int n_beta = 0;

  int n_qubits() const { return hamiltonian.n_qubits(); }

  static Problem from_integrals(const chem::IntegralSet& ints,
                                ci::SpinOrdering ordering = ci::SpinOrdering::kInterleaved);
  static Problem from_hamiltonian(chem::PauliSum h, int n_alpha, int n_beta,
                                  ci::SpinOrdering ordering = ci::SpinOrdering::kInterleaved);
};

}  // namespace hyperion::adapt
