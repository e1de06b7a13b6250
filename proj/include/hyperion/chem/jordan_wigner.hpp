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

#include "hyperion/chem/pauli.hpp"
#include "hyperion/chem/second_quantized.hpp"

namespace hyperion::chem {

/// Maps a spin-orbital Hamiltonian to qubits with
///   a+_p -> (X_p - i Y_p)/2 (x) Z_{p-1} ... Z_0.
/// Imaginary parts must cancel to <= 1e-12 (else ContractError: the input is
/// not Hermitian); real coefficients <= 1e-12 are dropped.
PauliSum jordan_wigner(const SecondQuantizedHamiltonian& sq);

/// ingest pipeline: FCIDUMP integrals -> spin orbitals -> qubits.
PauliSum qubit_hamiltonian(const IntegralSet& ints,
                           ci::SpinOrdering ordering = ci::SpinOrdering::kInterleaved);

}  // namespace hyperion::chem
