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
#include <vector>

#include "nmpt/optimize.hpp"
#include "nmpt/process_tensor.hpp"

namespace nmpt {

// ---- decoupling -------------------------------------------------------------

/// Both qubits start in |+⟩, idle `pre_idle_ns`, the system gets one gate,
/// idle `post_idle_ns`, then two-qubit tomography.
struct DecouplingLayout {
  double exchange_khz = 50.0;
  double zz_khz = 30.0;
  double pre_idle_ns = 256.0;
  double post_idle_ns = 256.0;
};

CMatrix coupling_hamiltonian(double exchange_khz, double zz_khz);

/// One-interval model whose initial state already includes the pre-gate idle.
SEModel decoupling_probe_model(const DecouplingLayout& layout);

struct DecouplingData {
  std::vector<CMatrix> basis;
  std::int64_t shots = 0;  // 0: exact states, no records
  std::uint64_t seed = 0;
  std::vector<TwoQubitRecord> records;
  std::vector<CMatrix> states;
};

DecouplingData simulate_decoupling_data(const SEModel& probe, const std::vector<CMatrix>& basis,
                                        std::int64_t shots, std::uint64_t seed);

/// One operation slot, 4×4 outputs.
ProcessTensor decoupling_tensor(const DecouplingData& data);

/// 2 − γ₁ − γ₂ of the projected prediction for gate u.
double decoupling_objective(const ProcessTensor& pt, const CMatrix& u);

/// |tr V|/2 for V = u/√det u; zero exactly for π rotations.
double involution_defect(const CMatrix& u);

struct DecouplingOptions {
  int restarts = 20;
  NelderMeadOptions nm{4000, 1e-8, 1e-7, 0.6};
  /// Runs within this objective window of the best count as optimal; among
  /// them the gate closest to an involution is reported.
  double degeneracy_tolerance = 1e-3;
};

struct DecouplingResult {
  UnitaryParams gate{};
  CMatrix unitary;
  double objective = 0.0;
  RotationAxisAngle rotation{};
  double involution_defect = 0.0;
  /// More than one distinct channel reached the optimal window.
  bool degenerate = false;
  int optimal_runs = 0;
  int restarts = 0;
  int evaluations = 0;
};

DecouplingResult optimize_decoupling(const ProcessTensor& pt, std::uint64_t seed,
                                     const DecouplingOptions& opts = {});

struct TrajectoryPoint {
  double time_ns = 0.0;
  double negativity = 0.0;
  double mutual_info_bits = 0.0;
  double purity_q1 = 0.0;
  double purity_q2 = 0.0;
};

struct TrajectoryOptions {
  double period_ns = 512.0;
  double first_gate_ns = 256.0;
  double horizon_ns = 4096.0;
  double sample_ns = 128.0;
};

/// Exact two-qubit evolution from |++⟩ with the gates of `cycle` applied to
/// the system in turn at first_gate_ns + k·period_ns. An empty cycle is free
/// evolution. Samples are taken just before any gate at the same time.
std::vector<TrajectoryPoint> decoupling_trajectory(const DecouplingLayout& layout,
                                                   const std::vector<CMatrix>& cycle,
                                                   const TrajectoryOptions& opts = {});

struct DecouplingComparison {
  std::vector<TrajectoryPoint> idle;
  std::vector<TrajectoryPoint> decoupled;
  /// X, Y, X, Y reference sequence on the same schedule (not part of the
  /// optimization; reported for comparison).
  std::vector<TrajectoryPoint> xy4;
};

DecouplingComparison apply_periodic_decoupling(const DecouplingLayout& layout,
                                               const CMatrix& gate,
                                               const TrajectoryOptions& opts = {});

double min_purity(const std::vector<TrajectoryPoint>& t);
double peak_negativity(const std::vector<TrajectoryPoint>& t);

// ---- non-unitary synthesis --------------------------------------------------

/// 𝒩(α, η) with Kraus operators √η E and √(1−η) Y E, E = R_X(α) R_Y(α) R_Z(α).
struct NonUnitaryTarget {
  double alpha = 0.0;
  double eta = 0.0;

  QuantumChannel channel() const;
};

/// Preparation, idle, gate, idle, single-qubit tomography.
struct SynthesisLayout {
  double exchange_khz = 50.0;
  double zz_khz = 30.0;
  double idle_ns = 800.0;
  EnvInit env_init = EnvInit::Plus;
};

SEModel synthesis_model(const SynthesisLayout& layout);

/// Preparation slot (the four preparations) then one operation slot over
/// `basis`; `shots` = 0 uses exact states.
ProcessTensor synthesis_tensor(const SEModel& model, const std::vector<CMatrix>& basis,
                               std::int64_t shots, std::uint64_t seed);

/// ½ Σ_j ‖τ_j − 𝒩(P_j|0⟩⟨0|P_j†)‖₁ over the four preparations.
double synthesis_loss(const ProcessTensor& pt, const QuantumChannel& target, const CMatrix& u);

struct SynthesisResult {
  UnitaryParams gate{};
  double loss = 0.0;
  QuantumChannel realized;
  double process_fidelity = 0.0;
  double target_unitarity = 0.0;
  double realized_unitarity = 0.0;
  int evaluations = 0;
};

struct SynthesisOptions {
  int restarts = 20;
  NelderMeadOptions nm{4000, 1e-8, 1e-7, 0.6};
  /// Shots for the process tomography of the realized map (0: exact).
  std::int64_t qpt_shots = 0;
};

SynthesisResult synthesize_gate(const ProcessTensor& pt, const SEModel& model,
                                const NonUnitaryTarget& target, std::uint64_t seed,
                                const SynthesisOptions& opts = {});

struct SweepPoint {
  double eta = 0.0;
  SynthesisResult result;
};

/// η on an evenly spaced grid over [0, 0.5].
std::vector<SweepPoint> synthesis_sweep(const ProcessTensor& pt, const SEModel& model,
                                        double alpha, int points, std::uint64_t seed,
                                        const SynthesisOptions& opts = {});

struct SweepSummary {
  double peak_fidelity = 0.0;
  /// Lowest unitarity among the realized maps of the sweep.
  double achievable_unitarity = 0.0;
  /// Fidelity never rises (beyond the tolerance) as target unitarity falls
  /// below the achievable one.
  bool monotone_below_peak = true;
  double worst_rise = 0.0;
};

SweepSummary summarize_sweep(const std::vector<SweepPoint>& sweep, double tolerance = 0.0);

}  // namespace nmpt
