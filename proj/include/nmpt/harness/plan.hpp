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
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "nmpt/control.hpp"
#include "nmpt/markov.hpp"

namespace nmpt::harness {

enum class Stage { Characterize, Evaluate, Memory, Markov, Decouple, Synthesize };

const std::vector<Stage>& all_stages();
std::string stage_name(Stage s);
Stage parse_stage(const std::string& name);
/// Stages that must have completed before `s` runs.
std::vector<Stage> stage_prerequisites(Stage s);

enum class ModelKind { CoupledNeighbor, MarkovianReset, SwapMemory, Noiseless, Custom };

/// One Hamiltonian term 2π·f·P/2 on (system, neighbour), P a two-letter Pauli string.
struct HamiltonianTerm {
  std::string paulis;
  double freq_khz = 0.0;
};

struct ModelConfig {
  ModelKind kind = ModelKind::CoupledNeighbor;
  double exchange_freq_khz = 50.0;
  double zz_freq_khz = 30.0;
  std::vector<HamiltonianTerm> terms;  // Custom only
  double gate_duration_ns = 72.0;
  double idle_duration_ns = 928.0;
  double idle_scale = 1.0;
  EnvInit env_init = EnvInit::Zero;

  double step_ns() const { return gate_duration_ns + idle_scale * idle_duration_ns; }
};

struct MemoryPlan {
  int restarts = 20;
  int resamples = 40;
};

struct DecouplePlan {
  int basis_size = 24;
  double pre_idle_ns = 256.0;
  double post_idle_ns = 256.0;
  double period_ns = 512.0;
  double horizon_ns = 8192.0;
  double sample_ns = 128.0;
  /// 0 uses exact two-qubit states.
  std::int64_t shots = 1600;
};

struct SynthesizePlan {
  int basis_size = 24;
  double idle_ns = 800.0;
  EnvInit env_init = EnvInit::Plus;
  int grid_points = 11;
  std::int64_t shots = 0;
};

struct ExperimentPlan {
  int schema_version = 1;
  std::string name;
  ModelConfig model;
  int pool_size = 28;
  int basis_size = 24;
  /// Order of the pool before the first `basis_size` elements are taken.
  bool overlap_ordering = true;
  std::uint64_t pool_seed = 11;
  std::uint64_t seed = 3;
  std::int64_t shots = 1600;
  std::int64_t markov_shots = 25600;
  int out_of_basis_preparations = 0;
  int bootstrap_resamples = 100;
  std::vector<int> evaluate_sizes{10, 12, 14, 16, 18, 20, 22, 24, 26};
  MemoryPlan memory;
  DecouplePlan decouple;
  SynthesizePlan synthesize;
  std::vector<Stage> stages = all_stages();
};

/// Throws ConfigError naming the offending field path (e.g. "model.env_init").
ExperimentPlan plan_from_json(const nlohmann::json& j);
ExperimentPlan load_plan(const std::filesystem::path& path);
nlohmann::json plan_to_json(const ExperimentPlan& plan);
void validate(const ExperimentPlan& plan);

/// Three-step model of the plan.
SEModel build_model(const ExperimentPlan& plan);
CMatrix plan_hamiltonian(const ModelConfig& m);
StepModelFactory plan_step_factory(const ExperimentPlan& plan);

/// Pool in draw order and the order used for the tensor basis.
std::vector<CMatrix> plan_pool(const ExperimentPlan& plan);
std::vector<int> plan_order(const ExperimentPlan& plan, const std::vector<CMatrix>& pool);
/// Four basis preparations followed by any out-of-basis ones.
std::vector<CMatrix> plan_preparations(const ExperimentPlan& plan);

}  // namespace nmpt::harness
