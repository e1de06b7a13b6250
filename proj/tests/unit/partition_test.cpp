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

#include <algorithm>
#include <random>

#include "hyperion/chem/jordan_wigner.hpp"
#include "hyperion/oracle/dense.hpp"
#include "hyperion/oracle/tensor.hpp"
#include "hyperion/partition/partition.hpp"
#include "test_util.hpp"

namespace hyperion::partition {
namespace {

using chem::Pauli;
using chem::PauliSum;
using chem::PauliTerm;
using chem::PauliWord;
using sv::ExcitationOperator;

PauliSum random_sum(std::mt19937_64& rng, int n, int n_terms) {
  std::uniform_int_distribution<Bits> word(0, (Bits{1} << n) - 1);
  std::uniform_real_distribution<double> coef(-1, 1);
  std::vector<PauliTerm> terms;
  while (static_cast<int>(terms.size()) < n_terms) {
    Bits x = word(rng), z = word(rng);
    if (popcount(x & z) % 2 == 0) terms.push_back({coef(rng), PauliWord(n, x, z)});
  }
  return PauliSum::from_terms(n, terms);
}

std::vector<ExcitationOperator> spin_ops(int n) {
  std::vector<ExcitationOperator> out;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q && (p % 2) == (q % 2)) out.push_back(ExcitationOperator::single(p, q));
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          if (r != p && r != q && s != p && s != q && (p % 2 + q % 2) == (r % 2 + s % 2))
            out.push_back(ExcitationOperator::double_(p, q, r, s));
  return out;
}

oracle::DenseVector embed(const sv::SvState& s) {
  oracle::DenseVector full = oracle::DenseVector::Zero(Eigen::Index{1} << s.basis->n_qubits());
  for (std::size_t k = 0; k < s.vec.nnz(); ++k)
    full(static_cast<Eigen::Index>(s.basis->states()[s.vec.indices()[k]])) = s.vec.values()[k];
  return full;
}

struct Problem {
  ci::CiBasis basis;
  PauliSum h;
  sparse::CsrMatrix full;
  ci::Configuration hf;
};

Problem load(const std::string& mol) {
  auto ints = testing::fixture(mol);
  auto h = chem::qubit_hamiltonian(ints);
  const int n = h.n_qubits();
  auto basis = ci::CiBasis::enumerate(n, ints.n_alpha(), ints.n_beta());
  auto full = sv::assemble_subspace_hamiltonian(h, basis);
  return Problem{std::move(basis), std::move(h), std::move(full), ci::hartree_fock_reference(ints.nelec, n)};
}

mps::TruncationPolicy exact_policy() {
  mps::TruncationPolicy p;
  p.bond_cap = 0;
  return p;
}

TEST(Partition, ClassifiesToyExample) {
  auto h = PauliSum::from_terms(4, {{1.0, PauliWord::single(4, 0, Pauli::Z)},
                                    {1.0, PauliWord::single(4, 3, Pauli::Z)},
                                    {0.5, PauliWord::parse("IXXI")}});
  auto ph = partition(h, 1, 4);
  EXPECT_EQ(ph.block_size, 2);
  EXPECT_EQ(ph.local_terms.size(), 2u);
  ASSERT_EQ(ph.boundary_groups.size(), 1u);
  const auto& [key, group] = *ph.boundary_groups.begin();
  EXPECT_EQ(key, (GroupKey{1, 1}));
  ASSERT_EQ(group.terms.size(), 1u);
  EXPECT_EQ(group.terms.terms()[0].word.support(), Bits{0b0110});
}

TEST(Partition, SupportClassification) {
  EXPECT_FALSE(classify_support(0, 8, 2));
  EXPECT_FALSE(classify_support(0b11, 8, 2));
  EXPECT_EQ(classify_support(0b100, 8, 2), std::nullopt);
  EXPECT_EQ(classify_support(0b11000, 8, 2), (GroupKey{1, 1}));
  EXPECT_EQ(classify_support(0b110, 8, 2), (GroupKey{2, 1}));
  EXPECT_EQ(classify_support(0b1100000, 8, 2), (GroupKey{2, 3}));
  EXPECT_EQ(classify_support(0b10000001, 8, 3), (GroupKey{1, 1}));
}

TEST(Partition, SingleLevelUsesOneGroup) {
  std::mt19937_64 rng(5);
  auto ph = partition(random_sum(rng, 8, 60), 1, 8);
  for (const auto& [key, g] : ph.boundary_groups) EXPECT_EQ(key, (GroupKey{1, 1}));
}

TEST(Partition, ReconstructsDenseHamiltonianAndTermSet) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    for (int eta : {1, 2}) {
      auto h = random_sum(rng, 8, 40);
      auto ph = partition(h, eta, 8);
      const int width = 8 >> eta;
      std::vector<PauliTerm> all = ph.local_terms.terms();
      for (const auto& t : ph.local_terms.terms()) {
        Bits s = t.word.support();
        if (s) EXPECT_EQ(__builtin_ctzll(s) / width, (63 - __builtin_clzll(s)) / width);
      }
      oracle::DenseMatrix sum = oracle::dense_from_pauli(ph.local_terms);
      for (const auto& [key, g] : ph.boundary_groups) {
        for (const auto& t : g.terms.terms()) all.push_back(t);
        for (const auto& part : g.mpo.parts) sum += oracle::dense_from_mpo(part);
      }
      auto by_word = [](const PauliTerm& a, const PauliTerm& b) { return a.word < b.word; };
      std::sort(all.begin(), all.end(), by_word);
      ASSERT_EQ(all.size(), h.size());
      for (std::size_t k = 0; k < all.size(); ++k) {
        EXPECT_EQ(all[k].word, h.terms()[k].word);
        EXPECT_EQ(all[k].coefficient, h.terms()[k].coefficient);
      }
      EXPECT_LE((sum - oracle::dense_from_pauli(h)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Partition, RejectsIndivisibleLevel) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(partition(random_sum(rng, 6, 5), 2, 6), ContractError);
  EXPECT_THROW(partition(PauliSum(4), 1, 4), ContractError);
}

TEST(Partition, LocalStorageIsSmaller) {
  for (std::string mol : {"h4", "h6"}) {
    auto p = load(mol);
    PartitionOptions opt;
    opt.basis = &p.basis;
    auto ph = partition(p.h, 1, p.h.n_qubits(), opt);
    ASSERT_GT(ph.boundary_term_count(), 0u);
    EXPECT_LT(ph.local_csr.nnz(), p.full.nnz()) << mol;
  }
}

TEST(Partition, NoCrossingTermsMatchesSvExactly) {
  auto p = load("h4");
  std::vector<PauliTerm> inside;
  for (const auto& t : p.h.terms())
    if (!classify_support(t.word.support(), 8, 1)) inside.push_back(t);
  auto h = PauliSum::from_terms(8, inside, 0.0);
  PartitionOptions opt;
  opt.basis = &p.basis;
  auto ph = partition(h, 1, 8, opt);
  EXPECT_TRUE(ph.boundary_groups.empty());
  auto m = sv::assemble_subspace_hamiltonian(h, p.basis);
  auto d = dual_from_configuration(p.basis, p.hf);
  std::mt19937_64 rng(3);
  auto ops = spin_ops(8);
  std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
  for (int k = 0; k < 6; ++k) d = apply_ansatz_dual(ops[pick(rng)], 0.4, d, exact_policy());
  EXPECT_EQ(expectation_partitioned(ph, d), sv::expectation(m, d.sv));
}

TEST(DualState, ExactMpsTracksSparseState) {
  auto p = load("h4");
  auto d = dual_from_configuration(p.basis, p.hf);
  auto ops = spin_ops(8);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
  std::uniform_real_distribution<double> angle(-1.5, 1.5);
  auto same = apply_ansatz_dual(ops[0], 0.0, d, exact_policy());
  EXPECT_EQ(same.sv.vec, d.sv.vec);
  EXPECT_EQ(oracle::dense_from_mps(same.mps), oracle::dense_from_mps(d.mps));
  for (int k = 0; k < 15; ++k) {
    d = apply_ansatz_dual(ops[pick(rng)], angle(rng), d, exact_policy());
    auto a = oracle::dense_from_mps(d.mps);
    auto b = embed(d.sv);
    EXPECT_LE((a - b).norm(), 1e-10);
  }
}

TEST(DualState, PartitionedEnergyMatchesSv) {
  for (std::string mol : {"h4", "h6"}) {
    auto p = load(mol);
    const int n = p.h.n_qubits();
    PartitionOptions opt;
    opt.basis = &p.basis;
    auto ph = partition(p.h, 1, n, opt);
    auto ops = spin_ops(n);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
    std::uniform_real_distribution<double> angle(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
      auto d = dual_from_configuration(p.basis, p.hf);
      for (int k = 0; k < 10; ++k) d = apply_ansatz_dual(ops[pick(rng)], angle(rng), d, exact_policy());
      EXPECT_NEAR(expectation_partitioned(ph, d), sv::expectation(p.full, d.sv), 1e-10) << mol;
    }
  }
}

TEST(DualState, TightTruncationStaysClose) {
  auto p = load("h4");
  PartitionOptions opt;
  opt.basis = &p.basis;
  auto ph = partition(p.h, 1, 8, opt);
  auto ops = spin_ops(8);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  mps::TruncationPolicy tight;
  tight.delta = 1e-12;
  mps::TruncationLog log;
  auto d = dual_from_configuration(p.basis, p.hf);
  for (int k = 0; k < 10; ++k) d = apply_ansatz_dual(ops[pick(rng)], angle(rng), d, tight, &log);
  EXPECT_NEAR(expectation_partitioned(ph, d), sv::expectation(p.full, d.sv), 1e-8);
  EXPECT_LE(log.running_max(), 1e-12);
}

TEST(PartitionGradient, MatchesSvAtHartreeFock) {
  auto p = load("h4");
  PartitionOptions opt;
  opt.basis = &p.basis;
  auto ph = partition(p.h, 1, 8, opt);
  auto d = dual_from_configuration(p.basis, p.hf);
  auto ops = spin_ops(8);
  mps::TruncationPolicy tight;
  tight.delta = 1e-12;
  auto batch = pool_gradients_partitioned(ph, d, ops, tight);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    double ref = sv::pool_gradient(p.full, d.sv, ops[k]);
    EXPECT_NEAR(pool_gradient_partitioned(ph, d, ops[k]), ref, 1e-8) << ops[k].to_string();
    EXPECT_NEAR(batch[k], ref, 1e-8) << ops[k].to_string();
  }
}

TEST(PartitionGradient, VanishesOnEigenstate) {
  auto p = load("h4");
  PartitionOptions opt;
  opt.basis = &p.basis;
  auto ph = partition(p.h, 1, 8, opt);
  auto ground = oracle::fci_ground_energy(p.full);
  std::vector<double> amp(ground.vector.data(), ground.vector.data() + ground.vector.size());
  sv::SvState s{&p.basis, sparse::SparseVector::from_dense(amp)};
  oracle::DenseVector full = embed(s);
  auto m = mps::from_dense(std::span<const double>(full.data(), static_cast<std::size_t>(full.size())), 8,
                           exact_policy());
  DualState d{s, m};
  for (const auto& op : spin_ops(8)) EXPECT_NEAR(pool_gradient_partitioned(ph, d, op), 0.0, 1e-8);
}

TEST(PartitionGradient, LocalOperatorWithoutBoundaryIsSvOnly) {
  auto h = PauliSum::from_terms(4, {{0.3, PauliWord::parse("ZZII")},
                                    {0.2, PauliWord::parse("IIZZ")},
                                    {0.7, PauliWord::parse("ZIII")}});
  auto basis = ci::CiBasis::enumerate(4, 1, 0);
  PartitionOptions opt;
  opt.basis = &basis;
  auto ph = partition(h, 1, 4, opt);
  EXPECT_TRUE(ph.boundary_groups.empty());
  auto d = dual_from_configuration(basis, {0b0001, 4});
  d = apply_ansatz_dual(ExcitationOperator::single(0, 2), 0.3, d, exact_policy());
  auto op = ExcitationOperator::single(0, 2);
  EXPECT_EQ(pool_gradient_partitioned(ph, d, op), sv::pool_gradient(ph.local_csr, d.sv, op));
}

}  // namespace
}  // namespace hyperion::partition
