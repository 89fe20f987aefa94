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
#include <string>
#include <vector>

#include "nmpt/process_tensor.hpp"
#include "nmpt/stats.hpp"

namespace nmpt {

/// Experiment [P_p, U_j, U_k] with indices into the dataset's preparation
/// list and unitary pool.
struct SequenceKey {
  int prep = 0;
  int first = 0;
  int second = 0;
};

std::string sequence_id(const SequenceKey& key);

/// Every three-step experiment over a pool of unitaries, simulated once.
/// The first `basis_preparations` preparations form the tensor's preparation
/// basis; any further ones are out-of-basis checks.
struct Dataset {
  std::vector<CMatrix> preparations;
  int basis_preparations = 4;
  std::vector<CMatrix> pool;
  /// 0 means exact states without records.
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<ExperimentRecord> records;
  std::vector<CMatrix> states;

  std::size_t index(int prep, int first, int second) const;
  std::size_t size() const { return preparations.size() * pool.size() * pool.size(); }
  SequenceKey key(std::size_t flat) const;
};

Dataset simulate_dataset(const SEModel& model, const std::vector<CMatrix>& preparations,
                         const std::vector<CMatrix>& pool, std::int64_t shots,
                         std::uint64_t seed, int basis_preparations = 4);

/// Recomputes `states` from `records` by QST.
void rebuild_states(Dataset& data);

/// Copy with every record's counts resampled (stream `index` of `seed`).
Dataset resample_dataset(const Dataset& data, std::uint64_t seed, std::uint64_t index);

/// Tensor from the first n pool elements in `order` (both unitary slots).
ProcessTensor build_tensor(const Dataset& data, const std::vector<int>& order, int n);

/// Fidelity of the physical projection of `predicted` with `measured`.
double reconstruction_fidelity(const CMatrix& predicted, const CMatrix& measured);

struct SplitResult {
  int n = 0;
  std::vector<SequenceKey> held_out;
  std::vector<double> fidelities;
  BoxStats infidelity;
  double mean_infidelity = 0.0;
};

/// Held-out sequences: preparations in `preps` (default: the basis set),
/// both unitaries from positions ≥ n of `order`.
std::vector<SequenceKey> held_out_keys(const Dataset& data, const std::vector<int>& order,
                                       int n, const std::vector<int>& preps = {});

SplitResult evaluate_tensor(const ProcessTensor& pt, const Dataset& data,
                            const std::vector<SequenceKey>& keys, int n);

SplitResult evaluate_split(const Dataset& data, const std::vector<int>& order, int n,
                           const std::vector<int>& preps = {});

std::vector<int> identity_order(std::size_t n);

using SplitStatistic = std::function<double(const SplitResult&)>;

double mean_infidelity_stat(const SplitResult& r);
double median_fidelity_stat(const SplitResult& r);

/// Resamples all counts, redoes QST → assembly → evaluation, and reports a
/// 95% interval around the statistic of the original data. The interval is
/// percentile-based after removing the mean resampling bias, so it covers
/// the point estimate.
ConfidenceInterval bootstrap_ci(const Dataset& data, const std::vector<int>& order, int n,
                      int resamples, std::uint64_t seed, const std::vector<int>& preps = {},
                      const SplitStatistic& stat = mean_infidelity_stat);

}  // namespace nmpt
