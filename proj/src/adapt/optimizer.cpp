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

#include "hyperion/adapt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperion/common.hpp"

namespace hyperion::adapt {

std::string to_string(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::kAuto: return "auto";
    case OptimizerKind::kBfgs: return "bfgs";
    case OptimizerKind::kCoordinate: return "coordinate";
  }
  return "auto";
}

OptimizerKind parse_optimizer_kind(const std::string& text) {
  if (text == "auto") return OptimizerKind::kAuto;
  if (text == "bfgs") return OptimizerKind::kBfgs;
  if (text == "coordinate") return OptimizerKind::kCoordinate;
  throw ParseError("unknown optimizer '" + text + "' (expected auto, bfgs or coordinate)");
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

OptimizeResult minimize_bfgs(const ObjectiveGradFn& fg, std::vector<double> x0, const OptimizerSettings& settings) {
  const std::size_t n = x0.size();
  OptimizeResult res;
  res.x = std::move(x0);
  std::vector<double> g(n), g_new(n), x_new(n), d(n), s(n), y(n), hy(n);
  res.value = fg(res.x, g);
  res.evals = 1;
  if (n == 0) return res;

  // Inverse Hessian approximation, row-major.
  std::vector<double> h(n * n, 0.0);
  auto reset = [&] {
    std::fill(h.begin(), h.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) h[i * n + i] = 1.0;
  };
  reset();
  constexpr double kArmijo = 1e-4;
  constexpr double kMaxStep = 1.0;

  while (norm(g) > settings.gtol) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc -= h[i * n + j] * g[j];
      d[i] = acc;
    }
    double slope = dot(g, d);
    if (!(slope < 0.0)) {
      reset();
      for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
      slope = dot(g, d);
    }
    double largest = 0.0;
    for (double v : d) largest = std::max(largest, std::abs(v));
    double alpha = largest > kMaxStep ? kMaxStep / largest : 1.0;

    bool accepted = false;
    double f_new = 0.0;
    for (int attempt = 0; attempt < 40; ++attempt) {
      if (res.evals >= settings.max_evals) {
        res.hit_max_evals = true;
        return res;
      }
      for (std::size_t i = 0; i < n; ++i) x_new[i] = res.x[i] + alpha * d[i];
      f_new = fg(x_new, g_new);
      ++res.evals;
      if (f_new <= res.value + kArmijo * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;

    for (std::size_t i = 0; i < n; ++i) {
      s[i] = x_new[i] - res.x[i];
      y[i] = g_new[i] - g[i];
    }
    const double drop = res.value - f_new;
    res.x = x_new;
    res.value = f_new;
    g = g_new;

    const double sy = dot(s, y);
    if (sy > 1e-16 * norm(s) * norm(y)) {
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
      const double rho = 1.0 / sy;
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += h[i * n + j] * y[j];
        hy[i] = acc;
      }
      const double yhy = dot(y, hy);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          h[i * n + j] += (1.0 + rho * yhy) * rho * s[i] * s[j] - rho * (hy[i] * s[j] + s[i] * hy[j]);
    }
    if (drop <= settings.bfgs_ftol) break;
  }
  return res;
}

namespace {

constexpr double kGolden = 0.3819660112501051;  // 2 - phi

struct LineSearch {
  const ObjectiveFn& f;
  std::vector<double>& x;
  std::size_t k;
  std::size_t& evals;
  std::size_t max_evals;

  double at(double t) {
    const double keep = x[k];
    x[k] = t;
    const double v = f(x);
    x[k] = keep;
    ++evals;
    return v;
  }
  bool exhausted() const { return evals >= max_evals; }
};

/// Minimises along coordinate k from x[k] with value f0. Returns the best
/// (t, f) seen, which is never worse than (x[k], f0).
std::pair<double, double> golden_line(LineSearch& ls, double f0, double step, double xtol) {
  double best_t = ls.x[ls.k], best_f = f0;
  auto visit = [&](double t) {
    double v = ls.at(t);
    if (v < best_f) {
      best_f = v;
      best_t = t;
    }
    return v;
  };
  // Bracket a < b < c with f(b) <= f(a), f(c).
  double b = best_t, fb = f0;
  double a = b - step, c = b + step;
  if (ls.exhausted()) return {best_t, best_f};
  double fa = visit(a);
  if (ls.exhausted()) return {best_t, best_f};
  double fc = visit(c);
  constexpr double kGrow = 1.618033988749895;
  int expansions = 0;
  while (!(fb <= fa && fb <= fc) && expansions < 60 && !ls.exhausted()) {
    if (fa < fc) {
      // Downhill to the left.
      c = b, fc = fb;
      b = a, fb = fa;
      a = b - kGrow * (c - b);
      fa = visit(a);
    } else {
      a = b, fa = fb;
      b = c, fb = fc;
      c = b + kGrow * (b - a);
      fc = visit(c);
    }
    ++expansions;
  }
  // Golden-section refinement of [a, c] around b.
  while (c - a > xtol && !ls.exhausted()) {
    const bool right = (c - b) > (b - a);
    const double t = right ? b + kGolden * (c - b) : b - kGolden * (b - a);
    const double ft = visit(t);
    if (ft < fb) {
      if (right) a = b; else c = b;
      b = t, fb = ft;
    } else {
      if (right) c = t; else a = t;
    }
  }
  return {best_t, best_f};
}

}  // namespace

OptimizeResult minimize_coordinate(const ObjectiveFn& f, std::vector<double> x0, const OptimizerSettings& settings) {
  OptimizeResult res;
  res.x = std::move(x0);
  res.value = f(res.x);
  res.evals = 1;
  const std::size_t n = res.x.size();
  if (n == 0) return res;
  std::vector<double> steps(n, 0.1);
  for (int sweep = 0; sweep < settings.max_sweeps; ++sweep) {
    const double start = res.value;
    for (std::size_t k = 0; k < n; ++k) {
      LineSearch ls{f, res.x, k, res.evals, settings.max_evals};
      const double before = res.x[k];
      auto [t, v] = golden_line(ls, res.value, steps[k], settings.xtol);
      if (v < res.value) {
        res.x[k] = t;
        res.value = v;
      }
      steps[k] = std::clamp(2.0 * std::abs(res.x[k] - before), 10.0 * settings.xtol, 0.5);
      if (res.evals >= settings.max_evals) {
        res.hit_max_evals = true;
        return res;
      }
    }
    if (sweep + 1 >= settings.min_sweeps && start - res.value <= settings.coordinate_ftol) break;
  }
  return res;
}

}  // namespace hyperion::adapt
