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

#include "nmpt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nmpt/errors.hpp"

namespace nmpt {

double quantile(std::vector<double> data, double q) {
  if (data.empty()) throw ConfigError("quantile: empty data");
  std::sort(data.begin(), data.end());
  const double pos = q * static_cast<double>(data.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, data.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return data[lo] + frac * (data[hi] - data[lo]);
}

double median(std::vector<double> data) { return quantile(std::move(data), 0.5); }

double mean(const std::vector<double>& data) {
  if (data.empty()) throw ConfigError("mean: empty data");
  return std::accumulate(data.begin(), data.end(), 0.0) / static_cast<double>(data.size());
}

BoxStats box_stats(const std::vector<double>& data) {
  BoxStats b;
  b.count = data.size();
  b.mean = mean(data);
  b.median = quantile(data, 0.5);
  b.q1 = quantile(data, 0.25);
  b.q3 = quantile(data, 0.75);
  const double iqr = b.q3 - b.q1;
  const double lo_fence = b.q1 - 1.5 * iqr;
  const double hi_fence = b.q3 + 1.5 * iqr;
  b.min = *std::min_element(data.begin(), data.end());
  b.max = *std::max_element(data.begin(), data.end());
  b.whisker_low = b.q1;
  b.whisker_high = b.q3;
  for (double x : data) {
    if (x >= lo_fence) b.whisker_low = std::min(b.whisker_low, x);
    if (x <= hi_fence) b.whisker_high = std::max(b.whisker_high, x);
  }
  return b;
}

ConfidenceInterval bootstrap_interval(double point, const std::vector<double>& replicates,
                            BootstrapMethod method, double level) {
  if (replicates.size() < 2) throw ConfigError("bootstrap: at least two resamples required");
  const double a = 0.5 * (1.0 - level);
  double lo = quantile(replicates, a);
  double hi = quantile(replicates, 1.0 - a);
  ConfidenceInterval out{point, lo, hi};
  switch (method) {
    case BootstrapMethod::Percentile:
      break;
    case BootstrapMethod::BiasShifted: {
      const double bias = mean(replicates) - point;
      out.lower = lo - bias;
      out.upper = hi - bias;
      break;
    }
    case BootstrapMethod::Basic:
      out.lower = 2.0 * point - hi;
      out.upper = 2.0 * point - lo;
      break;
  }
  return out;
}

double sign_test_p_value(int wins, int trials) {
  if (trials <= 0) return 1.0;
  const int k = std::min(wins, trials - wins);
  // P(X ≤ k) for X ~ Bin(trials, 1/2), doubled.
  double tail = 0.0;
  for (int i = 0; i <= k; ++i)
    tail += std::exp(std::lgamma(trials + 1.0) - std::lgamma(i + 1.0) -
                     std::lgamma(trials - i + 1.0) - trials * std::log(2.0));
  return std::min(1.0, 2.0 * tail);
}

double sign_test_p_greater(int wins, int trials) {
  if (trials <= 0) return 1.0;
  double tail = 0.0;
  for (int i = std::max(wins, 0); i <= trials; ++i)
    tail += std::exp(std::lgamma(trials + 1.0) - std::lgamma(i + 1.0) -
                     std::lgamma(trials - i + 1.0) - trials * std::log(2.0));
  return std::min(1.0, tail);
}

}  // namespace nmpt
