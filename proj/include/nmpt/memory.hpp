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

#include <array>
#include <optional>
#include <vector>

#include "nmpt/evaluation.hpp"
#include "nmpt/optimize.hpp"

namespace nmpt {

/// Encoder in slot 0, depolarizing barriers ℛ in `barrier_slots` ⊆ {1, 2},
/// the free unitary V in the remaining slot (if any), and a decoder followed
/// by computational-basis projectors.
struct MemoryProbeConfig {
  std::vector<int> barrier_slots;
  std::array<UnitaryParams, 2> encoder{};
  std::array<double, 2> encoder_probs{0.5, 0.5};
  UnitaryParams v{};
  UnitaryParams decoder{};
};

using JointDistribution = std::array<std::array<double, 2>, 2>;

/// I(E:D) in bits with probabilities clamped to [1e-12, 1].
double mutual_information_bits(const JointDistribution& p);

/// p(e_i, d_j) = p_{e_i} ⟨j|D ρ^i D†|j⟩, ρ^i the (projected) tensor prediction.
JointDistribution memory_distribution(const ProcessTensor& pt, const MemoryProbeConfig& cfg);

/// Conditional mutual information between encoded and decoded bits.
double cmi(const ProcessTensor& pt, const MemoryProbeConfig& cfg);

struct MemoryBound {
  std::vector<int> barrier_slots;
  double cmi_bits = 0.0;
  MemoryProbeConfig argmax;
  int restarts = 0;
  int iterations = 0;
  int evaluations = 0;
  std::optional<ConfidenceInterval> ci;

  /// Lower CI bound above zero.
  bool significant() const { return ci && ci->lower > 0.0; }
};

struct MemoryOptions {
  int restarts = 20;
  NelderMeadOptions nm{3000, 1e-6, 1e-6, 0.6};
  /// Bootstrap resamples (0 disables the interval) and the extra random
  /// restarts each resample adds to a warm start at the original argmax.
  int resamples = 0;
  int resample_restarts = 1;
};

/// Parameters per placement: encoder 6, decoder 3, and V 3 when only one
/// slot is a barrier.
int memory_parameter_count(const std::vector<int>& barrier_slots);
MemoryProbeConfig memory_config_from(const RVector& x, const std::vector<int>& barrier_slots);
RVector memory_params_of(const MemoryProbeConfig& cfg);

MemoryBound maximize_cmi(const ProcessTensor& pt, const std::vector<int>& barrier_slots,
                         std::uint64_t seed, const MemoryOptions& opts = {},
                         const std::vector<RVector>& starts = {});

/// maximize_cmi on the tensor of (data, order, n), plus a basic-bootstrap
/// interval from resampled counts with re-optimization per resample.
MemoryBound memory_bound(const Dataset& data, const std::vector<int>& order, int n,
                         const std::vector<int>& barrier_slots, std::uint64_t seed,
                         const MemoryOptions& opts = {});

/// The three placements {1}, {2}, {1, 2}.
const std::vector<std::vector<int>>& barrier_placements();

}  // namespace nmpt
