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

#include <string>
#include <vector>

#include "nmpt/basis.hpp"
#include "nmpt/simulator.hpp"

namespace nmpt {

/// Restricted process tensor
///   T̂ = Σ_μ (Δ_0^{μ0} ⊗ … ⊗ Δ_{k−1}^{μk−1})ᵀ ⊗ ρ^μ
/// over slot bases in time order. The matrix is neither PSD nor unit trace;
/// only its action on the spanned controls is meaningful.
class ProcessTensor {
 public:
  ProcessTensor() = default;
  ProcessTensor(std::vector<SlotBasis> slots, int out_dim, CMatrix matrix,
                std::vector<CMatrix> states);

  const std::vector<SlotBasis>& slots() const { return slots_; }
  int steps() const { return static_cast<int>(slots_.size()); }
  int out_dim() const { return out_dim_; }
  const CMatrix& matrix() const { return matrix_; }
  /// Training states in row-major multi-index order.
  const std::vector<CMatrix>& states() const { return states_; }
  std::size_t flat_index(const std::vector<int>& multi) const;

  std::string label;
  std::int64_t shots = 0;

 private:
  std::vector<SlotBasis> slots_;
  int out_dim_ = 0;
  CMatrix matrix_;
  std::vector<CMatrix> states_;
};

/// `states` holds one output per basis combination in row-major order over
/// the slots (last slot fastest).
ProcessTensor assemble(std::vector<SlotBasis> slots, std::vector<CMatrix> states,
                       int out_dim);

/// tr_in[(Â ⊗ I)ᵀ T̂] for per-slot normalized Choi states Â_j (any linear
/// combination of spanned controls is allowed).
CMatrix contract(const ProcessTensor& pt, const std::vector<CMatrix>& choi_states);
CMatrix contract(const ProcessTensor& pt, const ControlSequence& seq);

/// α^μ = tr[Â Δ^μ] for one slot.
std::vector<Complex> expansion_coefficients(const SlotBasis& slot, const CMatrix& choi_state);

/// Σ_μ Π_j α_j^{μj} ρ^μ, computed from the stored training states.
CMatrix contract_by_expansion(const ProcessTensor& pt, const std::vector<CMatrix>& choi_states);

/// A control written as a weighted sum of unitary channels.
struct SpanDecomposition {
  std::vector<CMatrix> unitaries;
  std::vector<double> weights;
  QuantumChannel channel;

  CMatrix choi_state() const;
};

/// ℛ(ρ) = (1/4) Σ_P PρP over the Paulis, i.e. ρ ↦ tr(ρ) I/2.
const SpanDecomposition& depolarizing_in_span();

}  // namespace nmpt
