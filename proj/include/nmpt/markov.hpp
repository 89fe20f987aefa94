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

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "nmpt/evaluation.hpp"
#include "nmpt/qpt.hpp"

namespace nmpt {

/// Builds a fresh one-interval model of the given duration (environment in
/// its configured initial state).
using StepModelFactory = std::function<SEModel(double duration_ns)>;

StepModelFactory step_model_factory(const CouplingConfig& cfg);

/// Each control step occupies gate_ns of evolution followed by idle_ns.
struct StepTiming {
  double gate_ns = 72.0;
  double idle_ns = 0.0;
};

enum class GateKind { Preparation, Pool };

struct GateRef {
  GateKind kind = GateKind::Pool;
  int index = 0;
};

/// Composable-channel model: every gate and idle is characterized on its own
/// by process tomography, and predictions multiply the channels out.
struct MarkovModel {
  /// Gate followed by its gate_ns of evolution.
  std::vector<QuantumChannel> preparations;
  std::vector<QuantumChannel> pool;
  /// One channel per distinct idle duration.
  std::map<double, QuantumChannel> idles;
  DensityMatrix initial = DensityMatrix::basis_state(2, 0);
  /// Computational-basis measurement effects (assumed ideal).
  std::array<CMatrix, 2> z_effects{bloch_matrix(0, 0, 1), bloch_matrix(0, 0, -1)};
  StepTiming timing;
  std::int64_t shots = 0;

  // Raw tomography data, kept for resampling.
  std::vector<QptData> preparation_data;
  std::vector<QptData> pool_data;
  std::map<double, QptData> idle_data;
  std::optional<ExperimentRecord> initial_record;
};

/// `shots` = 0 characterizes with exact output states.
MarkovModel characterize_gates(const StepModelFactory& step_model,
                               const std::vector<CMatrix>& preparations,
                               const std::vector<CMatrix>& pool, const StepTiming& timing,
                               std::int64_t shots, std::uint64_t seed);

/// Same model rebuilt from resampled tomography counts.
MarkovModel resample_markov(const MarkovModel& mm, std::uint64_t seed, std::uint64_t index);

/// Initial state → (gate, idle) for each step.
DensityMatrix predict_markov(const MarkovModel& mm, const std::vector<GateRef>& gates);

std::vector<double> markov_fidelities(const MarkovModel& mm, const Dataset& data,
                                      const std::vector<SequenceKey>& keys);

/// Interval for the median Markov fidelity. Each replicate resamples the
/// characterization counts and the verification data (with the same stream
/// indices bootstrap_ci uses), bias-shifted like bootstrap_ci.
ConfidenceInterval markov_bootstrap_ci(const MarkovModel& mm, const Dataset& data,
                                       const std::vector<SequenceKey>& keys, int resamples,
                                       std::uint64_t seed);

struct Comparison {
  BoxStats tensor;
  BoxStats markov;
  /// Per-sequence tensor fidelity minus Markov fidelity.
  std::vector<double> deltas;
  BoxStats delta;
};

Comparison compare(const std::vector<double>& tensor_fidelities,
                   const std::vector<double>& markov_fidelities);

}  // namespace nmpt
