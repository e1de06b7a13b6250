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

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hyperion::adapt {

enum class OptimizerKind { kAuto, kBfgs, kCoordinate };

std::string to_string(OptimizerKind kind);
OptimizerKind parse_optimizer_kind(const std::string& text);

struct OptimizerSettings {
  OptimizerKind kind = OptimizerKind::kAuto;
  /// Quasi-Newton stops at gradient norm <= gtol or an energy drop <= bfgs_ftol.
  double gtol = 1e-6;
  double bfgs_ftol = 1e-9;
  /// Coordinate search stops after min_sweeps once a sweep lowers the energy
  /// by <= coordinate_ftol.
  double coordinate_ftol = 1e-8;
  double xtol = 1e-7;
  int min_sweeps = 2;
  int max_sweeps = 200;
  std::size_t max_evals = 200000;
};

struct OptimizeResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evals = 0;
  bool hit_max_evals = false;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;
/// Returns f(x) and writes the gradient into the second argument.
using ObjectiveGradFn = std::function<double(std::span<const double>, std::vector<double>&)>;

/// BFGS on the inverse Hessian with Armijo backtracking. Every call of `fg`
/// counts as one evaluation. Accepted steps never raise f.
OptimizeResult minimize_bfgs(const ObjectiveGradFn& fg, std::vector<double> x0, const OptimizerSettings& settings);

/// Cyclic coordinate descent; each coordinate is refined by a golden-section
/// search inside a downhill bracket. Accepted steps never raise f.
OptimizeResult minimize_coordinate(const ObjectiveFn& f, std::vector<double> x0, const OptimizerSettings& settings);

}  // namespace hyperion::adapt
