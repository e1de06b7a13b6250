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

#include "hyperion/adapt/adapt.hpp"

#include <chrono>
#include <cmath>

namespace hyperion::adapt {

void AdaptConfig::validate() const {
  if (!(eps_grad > 0)) throw ContractError("eps_grad must be > 0");
  if (max_iter < 0) throw ContractError("max_iter must be >= 0");
  if (!(optimizer.gtol > 0) || !(optimizer.bfgs_ftol > 0) || !(optimizer.coordinate_ftol > 0) ||
      !(optimizer.xtol > 0))
    throw ContractError("optimizer tolerances must be > 0");
  if (optimizer.max_evals == 0 || optimizer.min_sweeps < 1 || optimizer.max_sweeps < optimizer.min_sweeps)
    throw ContractError("optimizer limits must be positive");
  if (engine != EngineKind::kSv && engine_options.delta < 0) throw ContractError("delta must be >= 0");
  if (engine == EngineKind::kPartitioned && engine_options.eta < 1) throw ContractError("eta must be >= 1");
}

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kConverged: return "converged";
    case RunStatus::kMaxIter: return "max_iter";
    case RunStatus::kAborted: return "aborted";
  }
  return "max_iter";
}

Selection select_operator(std::span<const double> gradients, double eps_grad) {
  if (gradients.empty()) throw ContractError("select_operator: empty gradient list");
  Selection s;
  for (std::size_t k = 0; k < gradients.size(); ++k) {
    const double g = std::abs(gradients[k]);
    if (g > s.grad_max) {
      s.grad_max = g;
      s.index = k;
    }
  }
  s.converged = s.grad_max < eps_grad;
  return s;
}

std::vector<double> screen_gradients(Engine& engine, std::span<const ExcitationOperator> pool) {
  return engine.screen(pool);
}

ParameterFit optimize_parameters(Engine& engine, std::span<const AnsatzElement> ansatz,
                                 const OptimizerSettings& settings) {
  std::vector<AnsatzElement> work(ansatz.begin(), ansatz.end());
  std::vector<double> x0;
  for (const auto& e : work) x0.push_back(e.theta);
  auto load = [&](std::span<const double> x) {
    for (std::size_t k = 0; k < work.size(); ++k) work[k].theta = x[k];
  };
  OptimizerKind kind = settings.kind;
  if (kind == OptimizerKind::kAuto)
    kind = engine.kind() == EngineKind::kSv ? OptimizerKind::kBfgs : OptimizerKind::kCoordinate;

  OptimizeResult r;
  if (kind == OptimizerKind::kBfgs) {
    r = minimize_bfgs(
        [&](std::span<const double> x, std::vector<double>& g) {
          load(x);
          return engine.energy_gradient(work, g);
        },
        std::move(x0), settings);
  } else {
    r = minimize_coordinate(
        [&](std::span<const double> x) {
          load(x);
          return engine.energy(work);
        },
        std::move(x0), settings);
  }
  return {std::move(r.x), r.value, r.evals, r.hit_max_evals};
}

RunResult run_adapt(const AdaptConfig& config, Engine& engine, std::span<const ExcitationOperator> pool,
                    const RecordSink& sink) {
  config.validate();
  if (pool.empty()) throw ContractError("run_adapt: empty operator pool");
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  RunResult result;
  std::size_t evals = 0;
  auto emit = [&](RunRecord rec) {
    if (config.reference_energy) rec.abs_error = std::abs(rec.energy - *config.reference_energy);
    const auto* log = engine.truncation_log();
    rec.max_trunc_err = log ? log->running_max() : 0.0;
    rec.nnz = engine.nnz();
    rec.energy_evals = evals;
    rec.wall_s = elapsed();
    result.records.push_back(rec);
    if (sink) sink(result.records.back());
  };

  try {
    RunRecord ref;
    ref.energy = engine.commit(result.ansatz, 0);
    ++evals;
    emit(ref);
    result.status = RunStatus::kMaxIter;
    for (int j = 1; j <= config.max_iter; ++j) {
      auto grads = screen_gradients(engine, pool);
      auto sel = select_operator(grads, config.eps_grad);
      if (sel.converged) {
        result.status = RunStatus::kConverged;
        break;
      }
      result.ansatz.push_back({pool[sel.index], 0.0});
      auto fit = optimize_parameters(engine, result.ansatz, config.optimizer);
      evals += fit.energy_evals;
      result.optimizer_hit_max_evals |= fit.hit_max_evals;
      for (std::size_t k = 0; k < fit.theta.size(); ++k) result.ansatz[k].theta = fit.theta[k];
      engine.commit(result.ansatz, j);
      RunRecord rec;
      rec.iteration = j;
      rec.selected_op = pool[sel.index].to_string();
      rec.grad_max = sel.grad_max;
      rec.energy = fit.energy;
      emit(rec);
    }
    if (result.status == RunStatus::kMaxIter && !result.records.empty()) {
      // A final screen tells whether the last iteration also converged.
      auto sel = select_operator(screen_gradients(engine, pool), config.eps_grad);
      if (sel.converged) result.status = RunStatus::kConverged;
    }
  } catch (const BondCapExceeded& e) {
    result.status = RunStatus::kAborted;
    result.message = e.what();
  }
  return result;
}

AmortizedFit amortized_coefficient(std::span<const RunRecord> records) {
  AmortizedFit fit;
  std::vector<double> times;
  double last = 0.0;
  for (const auto& r : records) {
    if (r.iteration < 1) continue;
    if (!(r.wall_s > 0)) throw ContractError("amortized_coefficient: wall times must be positive");
    if (r.wall_s < last) throw ContractError("amortized_coefficient: wall times decrease");
    last = r.wall_s;
    fit.iterations.push_back(r.iteration);
    times.push_back(r.wall_s);
  }
  if (times.size() < 2) throw ContractError("amortized_coefficient: need at least two iterations");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double j = fit.iterations[k];
    fit.coefficients.push_back(j / std::sqrt(times[k]));
    num += times[k] * j * j;
    den += j * j * j * j;
  }
  fit.fitted_c = num / den;
  for (std::size_t k = times.size() / 2; k < times.size(); ++k) {
    const double j = fit.iterations[k];
    fit.second_half_max_rel_error =
        std::max(fit.second_half_max_rel_error, std::abs(fit.fitted_c * j * j - times[k]) / times[k]);
  }
  fit.quadratic_valid = fit.second_half_max_rel_error <= 0.2;
  return fit;
}

}  // namespace hyperion::adapt
