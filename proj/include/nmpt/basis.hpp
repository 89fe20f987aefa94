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

#include "nmpt/channel.hpp"

namespace nmpt {

/// Dimension of the span of unitary channels on a d-level system.
constexpr int restricted_dimension(int d) { return d * d * d * d - 2 * d * d + 2; }

inline constexpr double kPinvCutoff = 1e-10;

/// The four state preparations H, S·H, I, X applied to |0⟩.
const std::vector<CMatrix>& preparation_unitaries();

/// `n` Haar-random qubit unitaries, deterministic in `seed`.
std::vector<CMatrix> generate_haar_pool(int n, std::uint64_t seed);

struct ControlBasis {
  std::vector<CMatrix> preparations;
  std::vector<CMatrix> unitaries;
  std::uint64_t seed = 0;
  /// Position of each element in the original draw.
  std::vector<int> source_index;
};

ControlBasis generate_haar_basis(int n, std::uint64_t seed);

/// Mean Hilbert–Schmidt overlap of each element's normalized Choi state with
/// the other elements.
std::vector<double> mean_overlaps(const std::vector<CMatrix>& unitaries);

/// Permutation sorting by ascending mean overlap; ties keep input order.
std::vector<int> overlap_order(const std::vector<CMatrix>& unitaries);

ControlBasis order_by_overlap(const ControlBasis& basis);

/// Orthonormal Hermitian frame of d×d matrices built from matrix units:
/// E_kk, (E_jk + E_kj)/√2, i(E_jk − E_kj)/√2.
const std::vector<CMatrix>& hermitian_frame(int d);

/// Real coordinates tr[Γ_k X] of a Hermitian operator.
RVector frame_coordinates(const CMatrix& x);
CMatrix from_frame_coordinates(const RVector& v, int d);

enum class DualMode { Exact, Relaxed };

struct DualSet {
  std::vector<CMatrix> duals;
  DualMode mode = DualMode::Exact;
  int rank = 0;
};

/// Duals of Hermitian `elements` from the pseudoinverse of their stacked
/// frame coordinates. Throws NumericalError if the rank is below `min_rank`.
DualSet build_duals(const std::vector<CMatrix>& elements, int min_rank);

enum class SlotKind { Preparation, Operation };

/// One time step of a process tensor: its control elements (as normalized
/// Choi states) and their duals.
///
/// For a preparation slot the duals are |0⟩⟨0|·d_S ⊗ d^μ, where d^μ are the
/// duals of the prepared states P^μ|0⟩⟨0|P^μ†. They satisfy duality with the
/// preparation channels and give tr[ÂD^μ] = tr[A(|0⟩⟨0|) d^μ] for any Â.
struct SlotBasis {
  SlotKind kind = SlotKind::Operation;
  std::vector<CMatrix> unitaries;
  std::vector<CMatrix> elements;
  DualSet duals;

  int size() const { return static_cast<int>(elements.size()); }
  int dim() const { return elements.empty() ? 0 : static_cast<int>(elements[0].rows()); }
};

SlotBasis make_operation_slot(const std::vector<CMatrix>& unitaries);
SlotBasis make_preparation_slot(const std::vector<CMatrix>& unitaries);

/// Normalized Choi state of U(·)U†.
CMatrix unitary_choi_state(const CMatrix& u);

}  // namespace nmpt
