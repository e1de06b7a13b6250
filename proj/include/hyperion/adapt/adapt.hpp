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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperion/adapt/engine.hpp"
#include "hyperion/adapt/optimizer.hpp"
#include "hyperion/adapt/pool.hpp"

namespace hyperion::adapt {

struct AdaptConfig {
  EngineKind engine = EngineKind::kSv;
  double eps_grad = 1e-3;
  int max_iter = 500;
  OptimizerSettings optimizer;
  EngineOptions engine_options;
  std::uint64_t seed = 0;
  /// Exact energy for the abs_error column, when known.
  std::optional<double> reference_energy;

  /// Throws ContractError on non-positive tolerances or limits.
  void validate() const;
};

struct RunRecord {
  int iteration = 0;
  std::string selected_op;  // empty for the reference record
  double grad_max = 0.0;
  double energy = 0.0;
  std::optional<double> abs_error;
  std::size_t nnz = 0;
  double max_trunc_err = 0.0;  // running max of logged truncation tails
  double wall_s = 0.0;         // since the start of the run
  std::size_t energy_evals = 0;  // cumulative
};

enum class RunStatus { kConverged, kMaxIter, kAborted };
std::string to_string(RunStatus status);

struct RunResult {
  std::vector<RunRecord> records;
  std::vector<AnsatzElement> ansatz;
  RunStatus status = RunStatus::kMaxIter;
  std::string message;
  bool optimizer_hit_max_evals = false;
};

struct Selection {
  bool converged = false;
  std::size_t index = 0;
  double grad_max = 0.0;
};

/// Argmax |g| with ties to the lowest index; converged when max |g| < eps_grad.
Selection select_operator(std::span<const double> gradients, double eps_grad);

/// Pool gradients at the engine's committed state, in pool order.
std::vector<double> screen_gradients(Engine& engine, std::span<const ExcitationOperator> pool);

struct ParameterFit {
  std::vector<double> theta;
  double energy = 0.0;
  std::size_t energy_evals = 0;
  bool hit_max_evals = false;
};

/// Optimises all angles of `ansatz` starting from their current values.
/// kAuto picks BFGS with analytic gradients for the SV engine and coordinate
/// search for the MPS-backed engines.
ParameterFit optimize_parameters(Engine& engine, std::span<const AnsatzElement> ansatz,
                                 const OptimizerSettings& settings);

using RecordSink = std::function<void(const RunRecord&)>;

/// Screen, select, append theta = 0, optimise, commit, record; until the
/// selection reports convergence or max_iter iterations are done. Records
/// are passed to `sink` as they are produced. A BondCapExceeded from the
/// engine ends the run with status kAborted.
RunResult run_adapt(const AdaptConfig& config, Engine& engine, std::span<const ExcitationOperator> pool,
                    const RecordSink& sink = {});

struct AmortizedFit {
  std::vector<int> iterations;
  std::vector<double> coefficients;  // j / sqrt(T_j)
  double fitted_c = 0.0;             // least squares T_j ~ C j^2
  /// Largest relative deviation |C j^2 - T_j| / T_j over the second half.
  double second_half_max_rel_error = 0.0;
  /// True when that deviation is within 20%.
  bool quadratic_valid = false;
};

/// Requires at least two records with j >= 1 and wall_s > 0; wall times
/// must not decrease.
AmortizedFit amortized_coefficient(std::span<const RunRecord> records);

}  // namespace hyperion::adapt
