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

#include <vector>

namespace nmpt {

/// Linearly interpolated quantile of unsorted data (q in [0, 1]).
double quantile(std::vector<double> data, double q);
double median(std::vector<double> data);
double mean(const std::vector<double>& data);

/// Box-plot summary; whiskers reach the most extreme points within
/// 1.5 IQR of the quartiles.
struct BoxStats {
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  double min = 0.0;
  double max = 0.0;
};

BoxStats box_stats(const std::vector<double>& data);

struct ConfidenceInterval {
  double point = 0.0;
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double x) const { return lower <= x && x <= upper; }
  bool overlaps(const ConfidenceInterval& o) const { return lower <= o.upper && o.lower <= upper; }
};

enum class BootstrapMethod {
  /// 2.5/97.5 percentiles of the replicates.
  Percentile,
  /// Percentiles after shifting the replicates by their mean bias
  /// (mean(θ*) − θ̂).
  BiasShifted,
  /// Reflected percentiles, [2θ̂ − q97.5, 2θ̂ − q2.5].
  Basic,
};

ConfidenceInterval bootstrap_interval(double point, const std::vector<double>& replicates,
                            BootstrapMethod method, double level = 0.95);

/// Two-sided sign test p-value for `wins` successes out of `trials`
/// non-tied comparisons.
double sign_test_p_value(int wins, int trials);

/// One-sided sign test: P(X >= wins) for X ~ Bin(trials, 1/2).
double sign_test_p_greater(int wins, int trials);

}  // namespace nmpt
