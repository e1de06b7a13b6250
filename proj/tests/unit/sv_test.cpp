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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "hyperion/chem/jordan_wigner.hpp"
#include "hyperion/oracle/dense.hpp"
#include "hyperion/sv/csr_cache.hpp"
#include "hyperion/sv/sv_engine.hpp"
#include "test_util.hpp"

namespace hyperion::sv {
namespace {

using chem::PauliSum;
using chem::PauliWord;

std::vector<int> from_list(const ExcitationOperator& op) {
  if (op.rank() == 1) return {op.from()[0]};
  return {op.from()[0], op.from()[1]};
}
std::vector<int> to_list(const ExcitationOperator& op) {
  if (op.rank() == 1) return {op.to()[0]};
  return {op.to()[0], op.to()[1]};
}

oracle::DenseVector embed(const SvState& s) {
  oracle::DenseVector full = oracle::DenseVector::Zero(Eigen::Index{1} << s.basis->n_qubits());
  for (std::size_t k = 0; k < s.vec.nnz(); ++k)
    full(static_cast<Eigen::Index>(s.basis->states()[s.vec.indices()[k]])) = s.vec.values()[k];
  return full;
}

SvState random_state(const ci::CiBasis& b, std::mt19937_64& rng, double density = 0.5) {
  std::uniform_real_distribution<double> u(-1, 1), coin(0, 1);
  std::vector<std::pair<sparse::Index, double>> e;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (coin(rng) < density || i == 0) e.emplace_back(static_cast<sparse::Index>(i), u(rng));
  return {&b, sparse::normalize(sparse::SparseVector::from_unsorted(b.size(), e))};
}

std::vector<ExcitationOperator> sector_ops(int n_qubits) {
  // Every spin-conserving single and double on the qubit register.
  std::vector<ExcitationOperator> out;
  const int norb = n_qubits / 2;
  for (int p = 0; p < n_qubits; ++p)
    for (int q = 0; q < n_qubits; ++q)
      if (p != q) {
        auto op = ExcitationOperator::single(p, q);
        if (op.spin_conserving(norb, ci::SpinOrdering::kInterleaved)) out.push_back(op);
      }
  for (int p = 0; p < n_qubits; ++p)
    for (int q = p + 1; q < n_qubits; ++q)
      for (int r = 0; r < n_qubits; ++r)
        for (int s = r + 1; s < n_qubits; ++s) {
          if (r == p || r == q || s == p || s == q) continue;
          auto op = ExcitationOperator::double_(p, q, r, s);
          if (op.spin_conserving(norb, ci::SpinOrdering::kInterleaved)) out.push_back(op);
        }
  return out;
}

TEST(Excitation, ParseRoundTripAndOrder) {
  auto s = ExcitationOperator::single(0, 2);
  auto d = ExcitationOperator::double_(1, 0, 3, 2);
  EXPECT_EQ(d.to_string(), "d(0 1->2 3)");
  EXPECT_EQ(ExcitationOperator::parse(s.to_string()), s);
  EXPECT_EQ(ExcitationOperator::parse(d.to_string()), d);
  EXPECT_LT(s, d);
  EXPECT_THROW(ExcitationOperator::double_(0, 0, 1, 2), ContractError);
  EXPECT_THROW(ExcitationOperator::parse("x(1)"), ParseError);
}

TEST(Assembly, ZOnSector) {
  auto b = ci::CiBasis::enumerate(4, 1, 1);
  auto m = assemble_subspace_hamiltonian(PauliSum::from_terms(4, {{1.0, PauliWord::parse("ZIII")}}), b);
  auto d = oracle::dense_from_csr(m);
  for (std::size_t i = 0; i < b.size(); ++i) {
    double expect = (b.states()[i] & 1u) ? -1.0 : 1.0;
    EXPECT_EQ(d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)), expect);
  }
  EXPECT_EQ(m.nnz(), b.size());
}

TEST(Assembly, ScaledIdentity) {
  auto b = ci::CiBasis::enumerate(6, 2, 1);
  auto m = assemble_subspace_hamiltonian(PauliSum::from_terms(6, {{2.5, PauliWord(6)}}), b);
  auto d = oracle::dense_from_csr(m);
  EXPECT_LE((d - 2.5 * oracle::DenseMatrix::Identity(d.rows(), d.cols())).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Assembly, RejectsSectorBreakingTerm) {
  auto b = ci::CiBasis::enumerate(4, 1, 1);
  EXPECT_THROW(assemble_subspace_hamiltonian(PauliSum::from_terms(4, {{1.0, PauliWord::parse("XIII")}}), b),
               ContractError);
}

TEST(Assembly, H4MatchesDenseRestriction) {
  auto ints = testing::fixture("h4");
  auto h = chem::qubit_hamiltonian(ints);
  auto b = ci::CiBasis::enumerate(8, 2, 2);
  auto m = assemble_subspace_hamiltonian(h, b);
  m.validate();
  EXPECT_TRUE(m.is_symmetric());
  auto full = oracle::dense_from_pauli(h);
  auto restricted = oracle::restrict_to(full, oracle::sector_states(8, 2, 2, ci::SpinOrdering::kInterleaved));
  EXPECT_LE((oracle::dense_from_csr(m) - restricted).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(oracle::fci_ground_energy(m).energy, oracle::dense_ground_state(full).energy, 1e-10);
  EXPECT_NEAR(oracle::fci_ground_energy(m).energy, testing::reference("h4", "fci_energy"), 1e-10);
}

TEST(Assembly, WorkerCountDoesNotChangeMatrix) {
  auto h = chem::qubit_hamiltonian(testing::fixture("h4"));
  auto b = ci::CiBasis::enumerate(8, 2, 2);
  auto one = assemble_subspace_hamiltonian(h, b, 1);
  auto many = assemble_subspace_hamiltonian(h, b, 5);
  EXPECT_EQ(one.row_offsets, many.row_offsets);
  EXPECT_EQ(one.col_indices, many.col_indices);
  EXPECT_EQ(one.values, many.values);
}

TEST(Expectation, HartreeFockEnergy) {
  for (const char* mol : {"h2", "h4"}) {
    auto ints = testing::fixture(mol);
    auto h = chem::qubit_hamiltonian(ints);
    auto b = ci::CiBasis::enumerate(2 * ints.norb, ints.n_alpha(), ints.n_beta());
    auto hf = ci::hartree_fock_reference(ints.nelec, 2 * ints.norb);
    auto s = SvState::from_configuration(b, hf);
    auto m = assemble_subspace_hamiltonian(h, b);
    EXPECT_NEAR(expectation(m, s), oracle::determinant_energy(oracle::dense_from_pauli(h), hf.bits), 1e-10);
    EXPECT_NEAR(expectation(m, s), testing::reference(mol, "hf_energy"), 1e-10);
  }
}

TEST(Expectation, IdentityAndEigenvector) {
  auto b = ci::CiBasis::enumerate(8, 2, 2);
  std::mt19937_64 rng(5);
  auto s = random_state(b, rng);
  EXPECT_NEAR(expectation(sparse::CsrMatrix::identity(b.size()), s), 1.0, 1e-14);
  auto m = assemble_subspace_hamiltonian(chem::qubit_hamiltonian(testing::fixture("h4")), b);
  auto ground = oracle::dense_ground_state(oracle::dense_from_csr(m));
  std::vector<double> v(ground.vector.data(), ground.vector.data() + ground.vector.size());
  SvState eig{&b, sparse::SparseVector::from_dense(v)};
  EXPECT_NEAR(expectation(m, eig), ground.energy, 1e-10);
}

TEST(Qeb, ZeroAngleIsIdentity) {
  auto b = ci::CiBasis::enumerate(8, 2, 2);
  std::mt19937_64 rng(6);
  auto s = random_state(b, rng);
  for (const auto& op : sector_ops(8)) EXPECT_EQ(apply_qeb_exponential(op, 0.0, s).vec, s.vec);
}

TEST(Qeb, QuarterTurnSwapsConfiguration) {
  auto b = ci::CiBasis::enumerate(4, 1, 1);
  auto s = SvState::from_configuration(b, {0b0011, 4});
  auto out = apply_qeb_exponential(ExcitationOperator::single(0, 2), std::numbers::pi / 2, s);
  EXPECT_NEAR(std::abs(out.vec.at(static_cast<sparse::Index>(*b.index_of(Bits{0b0110})))), 1.0, 1e-15);
  EXPECT_NEAR(out.vec.at(static_cast<sparse::Index>(*b.index_of(Bits{0b0011}))), 0.0, 1e-15);
}

TEST(Qeb, MatchesDenseExponentialAndPreservesNorm) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (auto [n, na, nb, trials] : {std::tuple{8, 2, 2, 90}, std::tuple{10, 3, 2, 10}}) {
    auto b = ci::CiBasis::enumerate(n, na, nb);
    auto ops = sector_ops(n);
    for (int trial = 0; trial < trials; ++trial) {
      const auto& op = ops[rng() % ops.size()];
      double theta = angle(rng);
      auto s = random_state(b, rng);
      auto out = apply_qeb_exponential(op, theta, s);
      EXPECT_NEAR(out.vec.norm(), s.vec.norm(), 1e-12);
      oracle::DenseVector expect = oracle::dense_expm(oracle::dense_qeb_generator(n, from_list(op), to_list(op)), theta) * embed(s);
      EXPECT_LE((embed(out) - expect).cwiseAbs().maxCoeff(), 1e-10) << op.to_string();
    }
  }
}

TEST(Qeb, GeneratorMatchesDenseGenerator) {
  auto b = ci::CiBasis::enumerate(8, 2, 2);
  std::mt19937_64 rng(8);
  for (const auto& op : sector_ops(8)) {
    auto s = random_state(b, rng);
    auto t = oracle::dense_qeb_generator(8, from_list(op), to_list(op));
    EXPECT_LE((embed(apply_generator(op, s)) - t * embed(s)).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(PoolGradient, MatchesFiniteDifference) {
  auto ints = testing::fixture("h4");
  auto b = ci::CiBasis::enumerate(8, 2, 2);
  auto m = assemble_subspace_hamiltonian(chem::qubit_hamiltonian(ints), b);
  std::mt19937_64 rng(9);
  auto ops = sector_ops(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = random_state(b, rng);
    const auto& op = ops[rng() % ops.size()];
    const double h = 1e-5;
    double fd = (expectation(m, apply_qeb_exponential(op, h, s)) - expectation(m, apply_qeb_exponential(op, -h, s))) /
                (2 * h);
    EXPECT_NEAR(pool_gradient(m, s, op), fd, 1e-6);
  }
}

TEST(PoolGradient, VanishesOnEigenstateAndOutsideSupport) {
  auto b = ci::CiBasis::enumerate(8, 2, 2);
  auto m = assemble_subspace_hamiltonian(chem::qubit_hamiltonian(testing::fixture("h4")), b);
  auto ground = oracle::dense_ground_state(oracle::dense_from_csr(m));
  std::vector<double> v(ground.vector.data(), ground.vector.data() + ground.vector.size());
  SvState eig{&b, sparse::SparseVector::from_dense(v)};
  auto ops = sector_ops(8);
  for (double g : pool_gradients(m, eig, ops)) EXPECT_NEAR(g, 0.0, 1e-10);

  // HF of H4 occupies qubits 0..3; moving 6 -> 4 needs qubit 6 occupied.
  auto hf = SvState::from_configuration(b, ci::hartree_fock_reference(4, 8));
  EXPECT_EQ(pool_gradient(m, hf, ExcitationOperator::single(6, 4)), 0.0);
}

TEST(PoolGradient, BatchMatchesSingleCalls) {
  auto b = ci::CiBasis::enumerate(8, 2, 2);
  auto m = assemble_subspace_hamiltonian(chem::qubit_hamiltonian(testing::fixture("h4")), b);
  std::mt19937_64 rng(10);
  auto s = random_state(b, rng);
  auto ops = sector_ops(8);
  auto batch = pool_gradients(m, s, ops, 3);
  for (std::size_t k = 0; k < ops.size(); ++k) EXPECT_EQ(batch[k], pool_gradient(m, s, ops[k]));
}

TEST(CsrCache, RoundTrip) {
  auto b = ci::CiBasis::enumerate(8, 2, 2);
  auto m = assemble_subspace_hamiltonian(chem::qubit_hamiltonian(testing::fixture("h4")), b);
  auto path = std::filesystem::temp_directory_path() / "hyperion_csr_cache_test.bin";
  write_csr_cache(m, path);
  auto back = read_csr_cache(path);
  EXPECT_EQ(back.row_offsets, m.row_offsets);
  EXPECT_EQ(back.col_indices, m.col_indices);
  EXPECT_EQ(back.values, m.values);
  std::filesystem::resize_file(path, 40);
  EXPECT_THROW(read_csr_cache(path), ParseError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace hyperion::sv
