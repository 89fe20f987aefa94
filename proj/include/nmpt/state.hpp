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

#include "nmpt/linalg.hpp"

namespace nmpt {

/// Tolerance used for every physicality check on states and channels.
inline constexpr double kPhysTol = 1e-9;

class DensityMatrix {
 public:
  /// Validates hermiticity, positivity and trace; stores the Hermitian part.
  explicit DensityMatrix(const CMatrix& m, bool subnormalized = false);

  static DensityMatrix pure(const CVector& psi);
  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix basis_state(int dim, int index);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  bool subnormalized() const { return subnormalized_; }
  double trace() const { return m_.trace().real(); }

 private:
  CMatrix m_;
  bool subnormalized_;
};

/// Nearest unit-trace PSD matrix in the eigenvalue-truncation sense: the
/// eigenvalues of the Hermitian part are shifted and clamped so they sum to 1.
DensityMatrix project_to_physical(const CMatrix& m);

enum class Axis { X = 0, Y = 1, Z = 2 };

struct PauliBasisSetting {
  Axis axis;
  std::array<CMatrix, 2> projectors;  // +1 outcome first

  static PauliBasisSetting make(Axis axis);
};

const std::array<PauliBasisSetting, 3>& pauli_settings();

/// Single-qubit state with Bloch vector r (no physicality check).
CMatrix bloch_matrix(double x, double y, double z);

}  // namespace nmpt
