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
#include <vector>

#include "nmpt/simulator.hpp"

namespace nmpt {

/// Nearest CPTP Choi matrix (Frobenius norm), by Dykstra's alternating
/// projections between the PSD cone and the trace-preserving affine set.
CMatrix project_cptp(const CMatrix& choi, int dim_in, int dim_out);

/// Input states of single-qubit process tomography: |0⟩, |1⟩, |+⟩, |+i⟩.
const std::array<CMatrix, 4>& qpt_inputs();

/// Raw data of one process-tomography run: one record per input state.
struct QptData {
  std::array<ExperimentRecord, 4> records;
};

/// Linear Choi estimate Σ_k d_kᵀ ⊗ σ_k from output states σ_k of the inputs
/// (d_k their duals), then CPTP projection.
QuantumChannel channel_from_outputs(const std::array<CMatrix, 4>& outputs);

QuantumChannel channel_from_qpt(const QptData& data);

/// Runs `layout` on each tomography input. The inputs replace the system
/// part of the model's initial state; the environment keeps its marginal.
std::array<DensityMatrix, 4> qpt_outputs(const SEModel& model, const ControlSequence& layout);

QptData qpt_data(const SEModel& model, const ControlSequence& layout, std::int64_t shots,
                 std::uint64_t seed);

/// Process tomography of `layout` through the simulator; `shots` = 0 uses the
/// exact output states.
QuantumChannel qpt(const SEModel& model, const ControlSequence& layout, std::int64_t shots,
                   std::uint64_t seed);

/// The exact reduced channel of `layout`, for comparison.
QuantumChannel exact_channel(const SEModel& model, const ControlSequence& layout);

}  // namespace nmpt
