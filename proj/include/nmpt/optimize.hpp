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

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nmpt/linalg.hpp"

namespace nmpt {

using Objective = std::function<double(const RVector&)>;

struct NelderMeadOptions {
  int max_evaluations = 4000;
  /// Stop when the spread of simplex values falls below this.
  double f_tolerance = 1e-8;
  /// ... and the simplex diameter below this.
  double x_tolerance = 1e-6;
  double initial_step = 0.6;
};

struct OptimResult {
  RVector x;
  double value = 0.0;
  int evaluations = 0;
  int iterations = 0;
  bool converged = false;
};

/// Minimizes `f` with the standard Nelder–Mead simplex (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2). Non-finite values count as +∞.
OptimResult nelder_mead(const Objective& f, const RVector& x0, const NelderMeadOptions& opts);

struct MultistartResult {
  OptimResult best;
  std::vector<OptimResult> runs;
  int total_evaluations = 0;
};

/// Runs Nelder–Mead from each of `starts`, plus `random_restarts` points
/// drawn uniformly from [lo, hi]^dim with the given seed.
MultistartResult multistart(const Objective& f, int dim, int random_restarts,
                            std::uint64_t seed, double lo, double hi,
                            const NelderMeadOptions& opts,
                            const std::vector<RVector>& starts = {});

}  // namespace nmpt
