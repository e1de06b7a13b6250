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
#include <set>

#include "hyperion/adapt/adapt.hpp"
#include "hyperion/adapt/pool.hpp"
#include "hyperion/chem/jordan_wigner.hpp"
#include "hyperion/oracle/dense.hpp"
#include "test_util.hpp"

namespace hyperion::adapt {
namespace {

Problem load(const std::string& mol) { return Problem::from_integrals(testing::fixture(mol)); }

double dense_fci(const Problem& p) {
  auto full = oracle::dense_from_pauli(p.hamiltonian);
  auto states = oracle::sector_states(p.n_qubits(), p.n_alpha, p.n_beta, p.ordering);
  return oracle::dense_ground_state(oracle::restrict_to(full, states)).energy;
}

oracle::DenseMatrix dense_generator(const ExcitationOperator& op, int n) {
  const auto f = op.from(), t = op.to();
  if (op.rank() == 1) return oracle::dense_qeb_generator(n, {f[0]}, {t[0]});
  return oracle::dense_qeb_generator(n, {f[0], f[1]}, {t[0], t[1]});
}

AdaptConfig sv_config() {
  AdaptConfig c;
  c.engine_options.workers = 1;
  return c;
}

EngineOptions exact_options() {
  EngineOptions o;
  o.delta = 0.0;
  o.bond_cap = 0;
  o.workers = 1;
  return o;
}

TEST(Pool, FourQubitsTwoElectrons) {
  auto pool = build_qeb_pool(4, 2);
  ASSERT_EQ(pool.size(), 3u);
  EXPECT_EQ(pool[0].to_string(), "s(0->2)");
  EXPECT_EQ(pool[1].to_string(), "s(1->3)");
  EXPECT_EQ(pool[2].to_string(), "d(0 1->2 3)");
}

TEST(Pool, NoVirtualOrbitalsIsAnError) { EXPECT_THROW(build_qeb_pool(4, 4), ContractError); }

TEST(Pool, MatchesBruteForceOnTwelveQubits) {
  const int n = 12;
  auto hf = ci::hartree_fock_reference(6, n);
  // Every (from, to) mask pair of one or two qubits, kept when it is an
  // occupied -> virtual move with conserved spin parity count.
  std::set<std::pair<Bits, Bits>> expected;
  for (Bits from = 1; from < (Bits{1} << n); ++from) {
    const int k = popcount(from);
    if (k > 2 || (from & hf.bits) != from) continue;
    for (Bits to = 1; to < (Bits{1} << n); ++to) {
      if (popcount(to) != k || (to & hf.bits) != 0) continue;
      int up_from = 0, up_to = 0;
      for (int q = 0; q < n; q += 2) {
        up_from += (from >> q) & 1;
        up_to += (to >> q) & 1;
      }
      if (up_from == up_to) expected.insert({from, to});
    }
  }
  auto pool = build_qeb_pool(n, 6);
  std::set<std::pair<Bits, Bits>> got;
  for (const auto& op : pool) got.insert({op.from_mask(), op.to_mask()});
  EXPECT_EQ(got.size(), pool.size());
  EXPECT_EQ(got, expected);
  EXPECT_TRUE(std::is_sorted(pool.begin(), pool.end()));
}

TEST(Select, ArgmaxOfMagnitude) {
  std::vector<double> g{0.1, -0.3, 0.2};
  auto s = select_operator(g, 1e-3);
  EXPECT_FALSE(s.converged);
  EXPECT_EQ(s.index, 1u);
  EXPECT_DOUBLE_EQ(s.grad_max, 0.3);
}

TEST(Select, TiesGoToLowestIndex) {
  std::vector<double> g{0.2, -0.2};
  EXPECT_EQ(select_operator(g, 1e-3).index, 0u);
}

TEST(Select, AllBelowThresholdConverges) {
  std::vector<double> g{1e-4, -5e-4};
  EXPECT_TRUE(select_operator(g, 1e-3).converged);
  EXPECT_THROW(select_operator(std::vector<double>{}, 1e-3), ContractError);
}

TEST(Screen, HartreeFockOnH2HasOneDominantDouble) {
  auto p = load("h2");
  SvEngine engine(p, exact_options());
  auto pool = build_qeb_pool(4, 2);
  engine.commit({}, 0);
  auto g = screen_gradients(engine, pool);
  // Dense commutator oracle: g_k = <HF|[H, T_k]|HF>.
  auto h = oracle::dense_from_pauli(p.hamiltonian);
  oracle::DenseVector hf = oracle::DenseVector::Zero(16);
  hf(static_cast<Eigen::Index>(p.reference.bits)) = 1.0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    auto t = dense_generator(pool[k], 4);
    const double expected = hf.dot((h * t - t * h) * hf);
    EXPECT_NEAR(g[k], expected, 1e-12);
    if (pool[k].rank() == 1) EXPECT_LE(std::abs(g[k]), 1e-10);
  }
  EXPECT_GT(std::abs(g[2]), 0.1);
  EXPECT_EQ(g, screen_gradients(engine, pool));
}

TEST(Screen, EigenstateIsStationary) {
  auto p = load("h2");
  SvEngine engine(p, exact_options());
  auto pool = build_qeb_pool(4, 2);
  std::vector<AnsatzElement> ansatz{{pool[2], 0.0}};
  auto fit = optimize_parameters(engine, ansatz, OptimizerSettings{});
  ansatz[0].theta = fit.theta[0];
  engine.commit(ansatz, 1);
  for (double g : screen_gradients(engine, pool)) EXPECT_LE(std::abs(g), 1e-8);
}

TEST(Optimize, SingleParameterH2ReachesFci) {
  auto p = load("h2");
  SvEngine engine(p, exact_options());
  auto pool = build_qeb_pool(4, 2);
  std::vector<AnsatzElement> ansatz{{pool[2], 0.0}};
  auto fit = optimize_parameters(engine, ansatz, OptimizerSettings{});
  EXPECT_NEAR(fit.energy, dense_fci(p), 1e-9);
  EXPECT_FALSE(fit.hit_max_evals);
}

TEST(Optimize, EmptyAnsatzReturnsReferenceEnergy) {
  auto p = load("h2");
  for (auto kind : {OptimizerKind::kBfgs, OptimizerKind::kCoordinate}) {
    SvEngine engine(p, exact_options());
    OptimizerSettings s;
    s.kind = kind;
    auto fit = optimize_parameters(engine, {}, s);
    EXPECT_NEAR(fit.energy, testing::reference("h2", "hf_energy"), 1e-10);
    EXPECT_EQ(fit.energy_evals, 1u);
  }
}

TEST(Optimize, CoordinateSearchMatchesBfgsOnH2) {
  auto p = load("h2");
  SvEngine engine(p, exact_options());
  auto pool = build_qeb_pool(4, 2);
  std::vector<AnsatzElement> ansatz{{pool[2], 0.0}};
  OptimizerSettings s;
  s.kind = OptimizerKind::kCoordinate;
  auto fit = optimize_parameters(engine, ansatz, s);
  EXPECT_NEAR(fit.energy, dense_fci(p), 1e-9);
}

TEST(Optimize, BfgsOnQuadratic) {
  auto fg = [](std::span<const double> x, std::vector<double>& g) {
    g = {2 * (x[0] - 1), 20 * (x[1] + 2)};
    return (x[0] - 1) * (x[0] - 1) + 10 * (x[1] + 2) * (x[1] + 2);
  };
  auto r = minimize_bfgs(fg, {0.0, 0.0}, OptimizerSettings{});
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], -2.0, 1e-6);
}

TEST(Optimize, CoordinateNeverRaisesTheObjective) {
  std::vector<double> seen;
  auto f = [&](std::span<const double> x) {
    const double v = std::cos(3 * x[0]) + 0.5 * std::sin(2 * x[1] + x[0]) + 0.1 * x[1] * x[1];
    seen.push_back(v);
    return v;
  };
  auto r = minimize_coordinate(f, {0.3, -0.2}, OptimizerSettings{});
  EXPECT_LE(r.value, seen.front());
  EXPECT_EQ(r.evals, seen.size());
  EXPECT_DOUBLE_EQ(r.value, *std::min_element(seen.begin(), seen.end()));
}

TEST(Optimize, MaxEvalsFlagsBestSoFar) {
  OptimizerSettings s;
  s.max_evals = 5;
  auto f = [](std::span<const double> x) { return (x[0] - 0.3) * (x[0] - 0.3); };
  auto r = minimize_coordinate(f, {0.0}, s);
  EXPECT_TRUE(r.hit_max_evals);
  EXPECT_LE(r.evals, 5u);
  EXPECT_LE(r.value, 0.09);
}

TEST(Run, H2ConvergesInTwoIterations) {
  auto p = load("h2");
  auto cfg = sv_config();
  cfg.reference_energy = dense_fci(p);
  SvEngine engine(p, cfg.engine_options);
  auto pool = build_qeb_pool(4, 2);
  auto res = run_adapt(cfg, engine, pool);
  EXPECT_EQ(res.status, RunStatus::kConverged);
  ASSERT_GE(res.records.size(), 2u);
  EXPECT_LE(res.records.size(), 3u);
  EXPECT_LE(*res.records.back().abs_error, 1e-8);
}

TEST(Run, HugeThresholdKeepsOnlyReferenceRecord) {
  auto p = load("h4");
  auto cfg = sv_config();
  cfg.eps_grad = 1e6;
  SvEngine engine(p, cfg.engine_options);
  auto pool = build_qeb_pool(p.n_qubits(), p.n_alpha, p.n_beta);
  std::vector<RunRecord> streamed;
  auto res = run_adapt(cfg, engine, pool, [&](const RunRecord& r) { streamed.push_back(r); });
  ASSERT_EQ(res.records.size(), 1u);
  EXPECT_EQ(streamed.size(), 1u);
  EXPECT_EQ(res.status, RunStatus::kConverged);
  EXPECT_NEAR(res.records[0].energy, testing::reference("h4", "hf_energy"), 1e-10);
  EXPECT_EQ(res.records[0].energy_evals, 1u);
  EXPECT_TRUE(res.records[0].selected_op.empty());
}

TEST(Run, InvalidConfigIsRejected) {
  auto p = load("h2");
  SvEngine engine(p, exact_options());
  auto pool = build_qeb_pool(4, 2);
  auto cfg = sv_config();
  cfg.eps_grad = 0.0;
  EXPECT_THROW(run_adapt(cfg, engine, pool), ContractError);
  cfg = sv_config();
  cfg.optimizer.gtol = -1.0;
  EXPECT_THROW(run_adapt(cfg, engine, pool), ContractError);
}

class H4Run : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    problem_ = new Problem(load("h4"));
    auto cfg = sv_config();
    cfg.max_iter = 40;
    cfg.reference_energy = dense_fci(*problem_);
    SvEngine engine(*problem_, cfg.engine_options);
    pool_ = new std::vector<ExcitationOperator>(build_qeb_pool(8, 2, 2));
    result_ = new RunResult(run_adapt(cfg, engine, *pool_));
  }
  static void TearDownTestSuite() {
    delete result_;
    delete pool_;
    delete problem_;
  }
  static Problem* problem_;
  static std::vector<ExcitationOperator>* pool_;
  static RunResult* result_;
};
Problem* H4Run::problem_ = nullptr;
std::vector<ExcitationOperator>* H4Run::pool_ = nullptr;
RunResult* H4Run::result_ = nullptr;

TEST_F(H4Run, ReachesFciWithinForty) {
  ASSERT_LE(result_->records.size(), 41u);
  EXPECT_LE(*result_->records.back().abs_error, 1e-4);
}

TEST_F(H4Run, EnergyIsMonotone) {
  const auto& r = result_->records;
  for (std::size_t j = 1; j < r.size(); ++j) EXPECT_LE(r[j].energy, r[j - 1].energy + 1e-12) << j;
}

TEST_F(H4Run, RecordsAreOrdered) {
  const auto& r = result_->records;
  for (std::size_t j = 1; j < r.size(); ++j) {
    EXPECT_EQ(r[j].iteration, r[j - 1].iteration + 1);
    EXPECT_GE(r[j].energy_evals, r[j - 1].energy_evals);
    EXPECT_GE(r[j].wall_s, r[j - 1].wall_s);
    EXPECT_EQ(r[j].max_trunc_err, 0.0);
  }
}

TEST_F(H4Run, EnergyEvalsGrowLinearlyEarly) {
  const auto& r = result_->records;
  const std::size_t last = std::min<std::size_t>(20, r.size() - 1);
  double lo = 1e300, hi = 0;
  for (std::size_t j = 1; j <= last; ++j) {
    const double rate = static_cast<double>(r[j].energy_evals) / static_cast<double>(j);
    lo = std::min(lo, rate);
    hi = std::max(hi, rate);
  }
  EXPECT_LE(hi, 10 * lo);
}

TEST_F(H4Run, IsDeterministic) {
  auto cfg = sv_config();
  cfg.max_iter = 40;
  cfg.reference_energy = dense_fci(*problem_);
  SvEngine engine(*problem_, cfg.engine_options);
  auto again = run_adapt(cfg, engine, *pool_);
  ASSERT_EQ(again.records.size(), result_->records.size());
  for (std::size_t j = 0; j < again.records.size(); ++j) {
    const auto& a = again.records[j];
    const auto& b = result_->records[j];
    EXPECT_EQ(a.selected_op, b.selected_op);
    EXPECT_EQ(a.energy, b.energy);
    EXPECT_EQ(a.grad_max, b.grad_max);
    EXPECT_EQ(a.energy_evals, b.energy_evals);
    EXPECT_EQ(a.nnz, b.nnz);
  }
}

TEST_F(H4Run, SelectionInvariantUnderScaling) {
  SvEngine engine(*problem_, exact_options());
  auto scaled = Problem::from_hamiltonian(problem_->hamiltonian.scaled(2.5), 2, 2);
  SvEngine engine2(scaled, exact_options());
  std::vector<AnsatzElement> ansatz;
  for (std::size_t j = 0; j < 6; ++j) {
    ansatz.push_back({(*pool_)[(7 * j + 3) % pool_->size()], 0.05 * static_cast<double>(j + 1)});
    engine.commit(ansatz, 0);
    engine2.commit(ansatz, 0);
    auto g = screen_gradients(engine, *pool_);
    auto g2 = screen_gradients(engine2, *pool_);
    for (std::size_t k = 0; k < g.size(); ++k) EXPECT_NEAR(g2[k], 2.5 * g[k], 1e-12);
    EXPECT_EQ(select_operator(g, 1e-3).index, select_operator(g2, 1e-3).index);
  }
}

TEST_F(H4Run, AmortizedFitOnRealRun) {
  auto fit = amortized_coefficient(result_->records);
  EXPECT_EQ(fit.iterations.size(), result_->records.size() - 1);
  EXPECT_GT(fit.fitted_c, 0.0);
}

TEST(Amortized, QuadraticTimesGiveHalf) {
  std::vector<RunRecord> recs(1);
  for (int j = 1; j <= 10; ++j) {
    RunRecord r;
    r.iteration = j;
    r.wall_s = 4.0 * j * j;
    recs.push_back(r);
  }
  auto fit = amortized_coefficient(recs);
  for (double c : fit.coefficients) EXPECT_EQ(c, 0.5);
  EXPECT_NEAR(fit.fitted_c, 4.0, 1e-12);
  EXPECT_TRUE(fit.quadratic_valid);
}

TEST(Amortized, LinearTimesAreFlagged) {
  std::vector<RunRecord> recs;
  for (int j = 1; j <= 20; ++j) {
    RunRecord r;
    r.iteration = j;
    r.wall_s = j;
    recs.push_back(r);
  }
  auto fit = amortized_coefficient(recs);
  for (std::size_t k = 0; k < fit.coefficients.size(); ++k)
    EXPECT_NEAR(fit.coefficients[k], std::sqrt(static_cast<double>(k + 1)), 1e-12);
  EXPECT_FALSE(fit.quadratic_valid);
}

TEST(Amortized, RejectsBadInput) {
  std::vector<RunRecord> recs(3);
  recs[1].iteration = 1;
  recs[1].wall_s = 2.0;
  recs[2].iteration = 2;
  recs[2].wall_s = 1.0;
  EXPECT_THROW(amortized_coefficient(recs), ContractError);
  recs[2].wall_s = 0.0;
  EXPECT_THROW(amortized_coefficient(recs), ContractError);
  recs.pop_back();
  EXPECT_THROW(amortized_coefficient(recs), ContractError);
}

// Analytic gradients of the tensor engines against central differences.
class EngineGradient : public ::testing::TestWithParam<EngineKind> {};

TEST_P(EngineGradient, MatchesFiniteDifferences) {
  auto p = load("h4");
  auto engine = make_engine(GetParam(), p, exact_options());
  auto pool = build_qeb_pool(8, 2, 2);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-0.6, 0.6);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<AnsatzElement> ansatz;
    for (int k = 0; k < 5; ++k) ansatz.push_back({pool[pick(rng)], angle(rng)});
    std::vector<double> g;
    engine->energy_gradient(ansatz, g);
    for (std::size_t k = 0; k < ansatz.size(); ++k) {
      auto plus = ansatz, minus = ansatz;
      plus[k].theta += 1e-5;
      minus[k].theta -= 1e-5;
      const double fd = (engine->energy(plus) - engine->energy(minus)) / 2e-5;
      EXPECT_NEAR(g[k], fd, 1e-6) << to_string(GetParam()) << " trial " << trial << " k " << k;
    }
  }
}

TEST_P(EngineGradient, ScreeningMatchesSv) {
  auto p = load("h4");
  auto engine = make_engine(GetParam(), p, exact_options());
  SvEngine sv(p, exact_options());
  auto pool = build_qeb_pool(8, 2, 2);
  std::vector<AnsatzElement> ansatz{{pool[20], 0.3}, {pool[3], -0.2}, {pool[11], 0.4}};
  engine->commit(ansatz, 1);
  sv.commit(ansatz, 1);
  auto g = engine->screen(pool);
  auto g_sv = sv.screen(pool);
  for (std::size_t k = 0; k < pool.size(); ++k) EXPECT_NEAR(g[k], g_sv[k], 1e-10);
}

INSTANTIATE_TEST_SUITE_P(TensorEngines, EngineGradient,
                         ::testing::Values(EngineKind::kSv, EngineKind::kMps, EngineKind::kPartitioned),
                         [](const auto& info) { return to_string(info.param); });

TEST(MpsRun, TruncationIsRecordedPerIteration) {
  auto p = load("h4");
  AdaptConfig cfg;
  cfg.engine = EngineKind::kMps;
  cfg.engine_options.delta = 1e-3;
  cfg.engine_options.workers = 1;
  cfg.max_iter = 3;
  auto engine = make_engine(cfg.engine, p, cfg.engine_options);
  auto pool = build_qeb_pool(8, 2, 2);
  auto res = run_adapt(cfg, *engine, pool);
  ASSERT_EQ(res.records.size(), 4u);
  for (std::size_t j = 1; j < res.records.size(); ++j) {
    EXPECT_GE(res.records[j].max_trunc_err, res.records[j - 1].max_trunc_err);
  }
  EXPECT_GT(res.records.back().max_trunc_err, 0.0);
  EXPECT_FALSE(engine->truncation_log()->empty());
}

TEST(MpsRun, BondCapAborts) {
  auto p = load("h4");
  AdaptConfig cfg;
  cfg.engine = EngineKind::kMps;
  cfg.engine_options.delta = 0.0;
  cfg.engine_options.bond_cap = 1;
  cfg.engine_options.workers = 1;
  cfg.max_iter = 5;
  auto engine = make_engine(cfg.engine, p, cfg.engine_options);
  auto pool = build_qeb_pool(8, 2, 2);
  auto res = run_adapt(cfg, *engine, pool);
  EXPECT_EQ(res.status, RunStatus::kAborted);
  EXPECT_FALSE(res.message.empty());
  EXPECT_GE(res.records.size(), 1u);
}

}  // namespace
}  // namespace hyperion::adapt
