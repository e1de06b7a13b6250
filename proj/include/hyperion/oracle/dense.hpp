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

#include <Eigen/Dense>
#include <vector>

#include "hyperion/chem/fcidump.hpp"
#include "hyperion/chem/pauli.hpp"
#include "hyperion/ci/configuration.hpp"
#include "hyperion/sparse/csr_matrix.hpp"

// Brute-force references for validating the engines. Nothing here calls
// engine code; inputs are read through their public data only.
namespace hyperion::oracle {

using DenseMatrix = Eigen::MatrixXd;
using DenseVector = Eigen::VectorXd;

inline constexpr int kMaxDenseQubits = 14;

/// Full 2^n matrix of a Pauli sum by Kronecker products of 2x2 factors.
DenseMatrix dense_from_pauli(const chem::PauliSum& h);

/// Full 2^(2 norb) Fock-space matrix of
///   E_core + sum h_pq a+_{p s} a_{q s} + 1/2 sum (pq|rs) a+_{p s} a+_{r t} a_{s t} a_{q s}
/// built from explicit creation/annihilation signs.
DenseMatrix dense_fermionic_hamiltonian(const chem::IntegralSet& ints, ci::SpinOrdering ordering);

/// Occupation-number states of n qubits with the given per-spin counts,
/// ascending, found by scanning all 2^n integers.
std::vector<Bits> sector_states(int n_qubits, int n_alpha, int n_beta, ci::SpinOrdering ordering);

/// Rows/columns of `full` picked by `states`.
DenseMatrix restrict_to(const DenseMatrix& full, const std::vector<Bits>& states);

/// <d| full |d> for a single determinant.
double determinant_energy(const DenseMatrix& full, Bits determinant);

DenseMatrix dense_from_csr(const sparse::CsrMatrix& m);

/// Dense generator Q+_to Q_from - h.c. with Q+ = |1><0| as Kronecker factors.
DenseMatrix dense_qeb_generator(int n_qubits, const std::vector<int>& from, const std::vector<int>& to);

struct EigenPair {
  double energy = 0.0;
  DenseVector vector;
  double residual = 0.0;
  int iterations = 0;
};

/// Lowest eigenpair by full diagonalisation.
EigenPair dense_ground_state(const DenseMatrix& m);

/// Lowest eigenpair by restarted Lanczos with full reorthogonalisation,
/// converged to ||M v - E v|| <= tolerance. When dim <= 4096 the result is
/// checked against dense_ground_state and an Error is thrown on disagreement
/// above 1e-10.
EigenPair fci_ground_energy(const sparse::CsrMatrix& m, double tolerance = 1e-12, int max_restarts = 200);
EigenPair fci_ground_energy(const DenseMatrix& m, double tolerance = 1e-12, int max_restarts = 200);

/// exp(theta G) for an antisymmetric generator (dim <= 4096).
DenseMatrix dense_expm(const DenseMatrix& generator, double theta);

}  // namespace hyperion::oracle
