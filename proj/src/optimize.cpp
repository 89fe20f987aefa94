// Copyright 2026 The nmpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmpt/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nmpt/rng.hpp"

namespace nmpt {

OptimResult nelder_mead(const Objective& f, const RVector& x0, const NelderMeadOptions& opts) {
  const Eigen::Index n = x0.size();
  OptimResult res;
  auto eval = [&](const RVector& x) {
    ++res.evaluations;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  std::vector<RVector> simplex{x0};
  for (Eigen::Index i = 0; i < n; ++i) {
    RVector x = x0;
    x(i) += opts.initial_step;
    simplex.push_back(x);
  }
  std::vector<double> fv;
  for (const auto& x : simplex) fv.push_back(eval(x));
  std::vector<std::size_t> order(simplex.size());

  while (res.evaluations < opts.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[order.size() - 2];

    double diam = 0.0;
    for (const auto& x : simplex) diam = std::max(diam, (x - simplex[best]).cwiseAbs().maxCoeff());
    if (std::abs(fv[worst] - fv[best]) <= opts.f_tolerance && diam <= opts.x_tolerance) {
      res.converged = true;
      break;
    }
    ++res.iterations;

    RVector centroid = RVector::Zero(n);
    for (std::size_t i = 0; i < simplex.size(); ++i)
      if (i != worst) centroid += simplex[i];
    centroid /= static_cast<double>(n);

    const RVector xr = centroid + (centroid - simplex[worst]);
    const double fr = eval(xr);
    if (fr < fv[best]) {
      const RVector xe = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        fv[worst] = fe;
      } else {
        simplex[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      simplex[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    const RVector xc = outside ? RVector(centroid + 0.5 * (xr - centroid))
                               : RVector(centroid + 0.5 * (simplex[worst] - centroid));
    const double fc = eval(xc);
    if (fc < (outside ? fr : fv[worst])) {
      simplex[worst] = xc;
      fv[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      fv[i] = eval(simplex[i]);
    }
  }
  const auto it = std::min_element(fv.begin(), fv.end());
  res.x = simplex[static_cast<std::size_t>(it - fv.begin())];
  res.value = *it;
  return res;
}

MultistartResult multistart(const Objective& f, int dim, int random_restarts,
                            std::uint64_t seed, double lo, double hi,
                            const NelderMeadOptions& opts, const std::vector<RVector>& starts) {
  MultistartResult out;
  std::vector<RVector> points = starts;
  Rng rng(seed);
  for (int r = 0; r < random_restarts; ++r) {
    RVector x(dim);
    for (int i = 0; i < dim; ++i) x(i) = rng.uniform(lo, hi);
    points.push_back(x);
  }
  if (points.empty()) throw ConfigError("multistart: no starting points");
  for (const auto& x0 : points) {
    OptimResult r = nelder_mead(f, x0, opts);
    out.total_evaluations += r.evaluations;
    if (out.runs.empty() || r.value < out.best.value) out.best = r;
    out.runs.push_back(std::move(r));
  }
  return out;
}

}  // namespace nmpt
