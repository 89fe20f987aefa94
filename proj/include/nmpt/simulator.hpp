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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmpt/channel.hpp"
#include "nmpt/rng.hpp"

namespace nmpt {

/// System–environment evolution between two control steps.
struct Interval {
  CMatrix unitary;
  double duration_ns = 0.0;
};

enum class EnvInit { Zero, Plus, Bell };

/// Exact model of a qubit coupled to an environment of env_dim levels.
/// System is the first kron factor.
struct SEModel {
  int sys_dim = 2;
  int env_dim = 1;
  std::vector<Interval> intervals;
  CMatrix initial_se;
  /// The environment is a single neighbouring qubit that may be measured.
  bool probeable = false;
  /// Optional system channel applied right before measurement (SPAM).
  std::optional<QuantumChannel> pre_measurement;

  int total_dim() const { return sys_dim * env_dim; }
  /// Throws DimensionError / PhysicalityError on a malformed model.
  void validate() const;
};

enum class StepSource { Preparation, Basis, Free };

struct ControlStep {
  QuantumChannel channel;
  StepSource source = StepSource::Free;
};

using ControlSequence = std::vector<ControlStep>;

ControlSequence make_sequence(const std::vector<QuantumChannel>& channels,
                              StepSource source = StepSource::Free);

/// Angular-frequency Hamiltonian g(XX+YY)/2 + ζ ZZ/2 in rad/ns.
CMatrix exchange_hamiltonian(double g_rad_per_ns, double zeta_rad_per_ns);

/// 2π·kHz expressed in rad/ns.
double khz_to_rad_per_ns(double khz);

/// exp(−iHt).
CMatrix evolve(const CMatrix& hamiltonian, double duration_ns);

CMatrix swap_gate();

/// Product |0⟩⟨0| ⊗ ρ_E, or a Bell state between system and a qubit
/// environment.
CMatrix initial_state(EnvInit init, int env_dim = 2);

struct CouplingConfig {
  double exchange_khz = 50.0;
  double zz_khz = 30.0;
  std::vector<double> interval_ns;  // one entry per control step
  EnvInit env_init = EnvInit::Zero;
};

/// System plus one neighbouring qubit under the always-on exchange/ZZ coupling.
SEModel coupled_neighbor_model(const CouplingConfig& cfg);

/// Each interval couples the system to its own fresh environment qubit, so no
/// correlations survive from one step to the next. Up to 3 intervals.
SEModel markovian_reset_model(const CouplingConfig& cfg);

/// Intervals [SWAP, I, SWAP] with an environment qubit in |0⟩: information
/// from slot 0 is hidden in the environment and restored at the end.
SEModel swap_memory_model();

/// Uncoupled qubit with env_dim = 1 and identity intervals.
SEModel noiseless_model(int steps);

/// Evolved joint state without trace-out.
CMatrix run_joint(const SEModel& model, const ControlSequence& seq);

/// tr_E of run_joint as a raw matrix (controls may be unchecked linear maps).
CMatrix run_sequence_matrix(const SEModel& model, const ControlSequence& seq);

DensityMatrix run_sequence(const SEModel& model, const ControlSequence& seq);

/// Joint system ⊗ neighbour state; requires a probe-able two-level environment.
DensityMatrix two_qubit_probe(const SEModel& model, const ControlSequence& seq);

using CountPair = std::array<std::int64_t, 2>;

CountPair sample_counts(const DensityMatrix& state, const PauliBasisSetting& setting,
                        std::int64_t shots, Rng& rng);
CountPair sample_counts(const DensityMatrix& state, const PauliBasisSetting& setting,
                        std::int64_t shots, std::uint64_t seed);

struct ExperimentRecord {
  std::string id;
  std::array<CountPair, 3> counts{};  // X, Y, Z
  std::int64_t shots = 0;
  std::uint64_t seed = 0;

  bool operator==(const ExperimentRecord&) const = default;
};

ExperimentRecord record_from_state(const DensityMatrix& state, std::int64_t shots,
                                   std::uint64_t seed, std::string id = {});

ExperimentRecord simulate_experiment(const SEModel& model, const ControlSequence& seq,
                                     std::int64_t shots, std::uint64_t seed,
                                     std::string id = {});

/// Two-qubit tomography counts: settings (a, b) in row-major order over
/// {X, Y, Z}², outcomes ordered ++, +−, −+, −−.
struct TwoQubitRecord {
  std::string id;
  std::array<std::array<std::int64_t, 4>, 9> counts{};
  std::int64_t shots = 0;
  std::uint64_t seed = 0;

  bool operator==(const TwoQubitRecord&) const = default;
};

TwoQubitRecord sample_two_qubit(const DensityMatrix& state, std::int64_t shots,
                                std::uint64_t seed, std::string id = {});

}  // namespace nmpt
