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

#include "hyperion/oracle/dense.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <Eigen/Sparse>

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <random>

namespace hyperion::oracle {

namespace {

using Complex = std::complex<double>;
using SparseC = Eigen::SparseMatrix<Complex>;
using SparseR = Eigen::SparseMatrix<double>;

void guard_qubits(int n, int limit, const char* what) {
  if (n < 0 || n > limit)
    throw ContractError(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the oracle limit of " +
                        std::to_string(limit));
}

SparseC small(std::initializer_list<Complex> entries) {
  Eigen::Matrix2cd d;
  auto it = entries.begin();
  d << it[0], it[1], it[2], it[3];
  return d.sparseView();
}

SparseC kron(const SparseC& a, const SparseC& b) {
  SparseC out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SparseC::InnerIterator ia(a, ka); ia; ++ia)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SparseC::InnerIterator ib(b, kb); ib; ++ib)
          trip.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(), ia.value() * ib.value());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

// Integer bit k is qubit k, so the highest qubit is the leftmost Kronecker factor.
SparseC kron_chain(int n, const std::function<SparseC(int)>& factor) {
  SparseC acc = factor(n - 1);
  for (int q = n - 2; q >= 0; --q) acc = kron(acc, factor(q));
  return acc;
}

const SparseC& pauli_matrix(chem::Pauli p) {
  static const SparseC kI = small({1, 0, 0, 1});
  static const SparseC kX = small({0, 1, 1, 0});
  static const SparseC kY = small({0, Complex(0, -1), Complex(0, 1), 0});
  static const SparseC kZ = small({1, 0, 0, -1});
  switch (p) {
    case chem::Pauli::X: return kX;
    case chem::Pauli::Y: return kY;
    case chem::Pauli::Z: return kZ;
    default: return kI;
  }
}

// a+_k |x> with the sign (-1)^{occupied below k}.
std::optional<std::pair<Bits, int>> create(Bits x, int k) {
  if ((x >> k) & 1u) return std::nullopt;
  int sign = (popcount(x & ((Bits{1} << k) - 1)) & 1) ? -1 : 1;
  return std::make_pair(x | (Bits{1} << k), sign);
}

std::optional<std::pair<Bits, int>> annihilate(Bits x, int k) {
  if (!((x >> k) & 1u)) return std::nullopt;
  int sign = (popcount(x & ((Bits{1} << k) - 1)) & 1) ? -1 : 1;
  return std::make_pair(x & ~(Bits{1} << k), sign);
}

int so(int p, int spin, int norb, ci::SpinOrdering ordering) {
  return ordering == ci::SpinOrdering::kInterleaved ? 2 * p + spin : p + spin * norb;
}

DenseVector apply(const DenseMatrix& m, const DenseVector& v) { return m * v; }

}  // namespace

DenseMatrix dense_from_pauli(const chem::PauliSum& h) {
  const int n = h.n_qubits();
  guard_qubits(n, kMaxDenseQubits, "dense_from_pauli");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    if (n == 0) {
      acc(0, 0) += t.coefficient;
      continue;
    }
    SparseC word = kron_chain(n, [&](int q) { return pauli_matrix(t.word.letter(q)); });
    for (int k = 0; k < word.outerSize(); ++k)
      for (SparseC::InnerIterator it(word, k); it; ++it) acc(it.row(), it.col()) += t.coefficient * it.value();
  }
  if (acc.imag().cwiseAbs().maxCoeff() > 1e-12) throw ContractError("dense_from_pauli: matrix is not real");
  return acc.real();
}

DenseMatrix dense_fermionic_hamiltonian(const chem::IntegralSet& ints, ci::SpinOrdering ordering) {
  const int norb = ints.norb;
  const int n = 2 * norb;
  guard_qubits(n, kMaxDenseQubits, "dense_fermionic_hamiltonian");
  const Bits dim = Bits{1} << n;
  DenseMatrix m = DenseMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)) *
                  ints.core_energy;
  for (Bits x = 0; x < dim; ++x) {
    const auto col = static_cast<Eigen::Index>(x);
    for (int s = 0; s < 2; ++s)
      for (int p = 0; p < norb; ++p)
        for (int q = 0; q < norb; ++q) {
          double v = ints.h(p, q);
          if (v == 0.0) continue;
          auto a = annihilate(x, so(q, s, norb, ordering));
          if (!a) continue;
          auto c = create(a->first, so(p, s, norb, ordering));
          if (!c) continue;
          m(static_cast<Eigen::Index>(c->first), col) += v * a->second * c->second;
        }
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        for (int p = 0; p < norb; ++p)
          for (int q = 0; q < norb; ++q)
            for (int r = 0; r < norb; ++r)
              for (int u = 0; u < norb; ++u) {
                double v = ints.eri(p, q, r, u);
                if (v == 0.0) continue;
                // a+_{p s} a+_{r t} a_{u t} a_{q s}
                auto a1 = annihilate(x, so(q, s, norb, ordering));
                if (!a1) continue;
                auto a2 = annihilate(a1->first, so(u, t, norb, ordering));
                if (!a2) continue;
                auto c1 = create(a2->first, so(r, t, norb, ordering));
                if (!c1) continue;
                auto c2 = create(c1->first, so(p, s, norb, ordering));
                if (!c2) continue;
                m(static_cast<Eigen::Index>(c2->first), col) +=
                    0.5 * v * a1->second * a2->second * c1->second * c2->second;
              }
  }
  return m;
}

std::vector<Bits> sector_states(int n_qubits, int n_alpha, int n_beta, ci::SpinOrdering ordering) {
  guard_qubits(n_qubits, 30, "sector_states");
  const int norb = n_qubits / 2;
  Bits alpha_mask = 0;
  for (int p = 0; p < norb; ++p) alpha_mask |= Bits{1} << so(p, 0, norb, ordering);
  std::vector<Bits> out;
  for (Bits x = 0; x < (Bits{1} << n_qubits); ++x)
    if (popcount(x & alpha_mask) == n_alpha && popcount(x & ~alpha_mask) == n_beta) out.push_back(x);
  return out;
}

DenseMatrix restrict_to(const DenseMatrix& full, const std::vector<Bits>& states) {
  const auto k = static_cast<Eigen::Index>(states.size());
  DenseMatrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      out(i, j) = full(static_cast<Eigen::Index>(states[static_cast<std::size_t>(i)]),
                       static_cast<Eigen::Index>(states[static_cast<std::size_t>(j)]));
  return out;
}

double determinant_energy(const DenseMatrix& full, Bits determinant) {
  auto i = static_cast<Eigen::Index>(determinant);
  return full(i, i);
}

DenseMatrix dense_from_csr(const sparse::CsrMatrix& m) {
  DenseMatrix out = DenseMatrix::Zero(static_cast<Eigen::Index>(m.n_rows), static_cast<Eigen::Index>(m.n_cols));
  for (std::size_t r = 0; r < m.n_rows; ++r)
    for (auto k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(m.col_indices[k])) += m.values[k];
  return out;
}

DenseMatrix dense_qeb_generator(int n_qubits, const std::vector<int>& from, const std::vector<int>& to) {
  guard_qubits(n_qubits, 12, "dense_qeb_generator");
  static const SparseC kRaise = small({0, 0, 1, 0});  // |1><0|
  static const SparseC kLower = small({0, 1, 0, 0});  // |0><1|
  static const SparseC kId = small({1, 0, 0, 1});
  auto has = [](const std::vector<int>& v, int q) { return std::find(v.begin(), v.end(), q) != v.end(); };
  SparseC forward = kron_chain(n_qubits, [&](int q) {
    if (has(to, q)) return kRaise;
    if (has(from, q)) return kLower;
    return kId;
  });
  Eigen::MatrixXcd f = Eigen::MatrixXcd(forward);
  Eigen::MatrixXcd g = f - f.adjoint();
  return g.real();
}

EigenPair dense_ground_state(const DenseMatrix& m) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m);
  if (solver.info() != Eigen::Success) throw Error("dense_ground_state: eigensolver failed");
  EigenPair out;
  out.energy = solver.eigenvalues()(0);
  out.vector = solver.eigenvectors().col(0);
  out.residual = (m * out.vector - out.energy * out.vector).norm();
  return out;
}

namespace {

EigenPair lanczos(const std::function<DenseVector(const DenseVector&)>& op, Eigen::Index dim, double tolerance,
                  int max_restarts) {
  if (dim == 0) throw ContractError("fci_ground_energy: empty matrix");
  const Eigen::Index krylov = std::min<Eigen::Index>(dim, 60);
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;
  DenseVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = gauss(rng);
  v.normalize();

  EigenPair best;
  for (int restart = 0; restart < max_restarts; ++restart) {
    DenseMatrix basis(dim, krylov);
    DenseMatrix proj = DenseMatrix::Zero(krylov, krylov);
    Eigen::Index used = 0;
    basis.col(0) = v;
    for (Eigen::Index j = 0; j < krylov; ++j) {
      DenseVector w = op(basis.col(j));
      used = j + 1;
      for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index k = 0; k <= j; ++k) {
          double c = basis.col(k).dot(w);
          if (pass == 0) proj(k, j) += c;
          w -= c * basis.col(k);
        }
      double beta = w.norm();
      if (j + 1 == krylov || beta < 1e-14) break;
      basis.col(j + 1) = w / beta;
    }
    DenseMatrix t = proj.topLeftCorner(used, used);
    t = 0.5 * (t + t.transpose());
    Eigen::SelfAdjointEigenSolver<DenseMatrix> small_solver(t);
    DenseVector y = small_solver.eigenvectors().col(0);
    v = (basis.leftCols(used) * y).normalized();
    DenseVector hv = op(v);
    best.energy = v.dot(hv);
    best.vector = v;
    best.residual = (hv - best.energy * v).norm();
    best.iterations = restart + 1;
    if (best.residual <= tolerance) return best;
  }
  throw Error("fci_ground_energy: Lanczos did not converge (residual " + std::to_string(best.residual) + ")");
}

void cross_check(const EigenPair& krylov, const DenseMatrix& m) {
  if (m.rows() > 4096) return;
  auto dense = dense_ground_state(m);
  if (std::abs(dense.energy - krylov.energy) > 1e-10)
    throw Error("fci_ground_energy: Krylov and dense eigenvalues disagree");
}

}  // namespace

EigenPair fci_ground_energy(const sparse::CsrMatrix& m, double tolerance, int max_restarts) {
  if (m.n_rows != m.n_cols) throw ContractError("fci_ground_energy: matrix is not square");
  auto op = [&m](const DenseVector& x) {
    DenseVector y = DenseVector::Zero(x.size());
    for (std::size_t r = 0; r < m.n_rows; ++r) {
      double acc = 0.0;
      for (auto k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k)
        acc += m.values[k] * x(static_cast<Eigen::Index>(m.col_indices[k]));
      y(static_cast<Eigen::Index>(r)) = acc;
    }
    return y;
  };
  auto out = lanczos(op, static_cast<Eigen::Index>(m.n_rows), tolerance, max_restarts);
  if (m.n_rows <= 4096) cross_check(out, dense_from_csr(m));
  return out;
}

EigenPair fci_ground_energy(const DenseMatrix& m, double tolerance, int max_restarts) {
  if (m.rows() != m.cols()) throw ContractError("fci_ground_energy: matrix is not square");
  auto out = lanczos([&m](const DenseVector& x) { return apply(m, x); }, m.rows(), tolerance, max_restarts);
  cross_check(out, m);
  return out;
}

DenseMatrix dense_expm(const DenseMatrix& generator, double theta) {
  if (generator.rows() != generator.cols() || generator.rows() > 4096)
    throw ContractError("dense_expm: generator must be square with dim <= 4096");
  if ((generator + generator.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw ContractError("dense_expm: generator is not antisymmetric");
  DenseMatrix scaled = theta * generator;
  return scaled.exp();
}

}  // namespace hyperion::oracle
