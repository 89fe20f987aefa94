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

#include <vector>

#include "nmpt/state.hpp"

namespace nmpt {

/// Uhlmann fidelity [tr √(√a b √a)]².
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

double purity(const DensityMatrix& rho);

/// Half the trace norm of a − b. Accepts arbitrary Hermitian operators.
double trace_distance(const CMatrix& a, const CMatrix& b);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep,
                            const std::vector<int>& dims);

/// Sum of |negative eigenvalues| of the partial transpose of a two-qubit state.
double negativity(const DensityMatrix& rho_ab);

/// Von Neumann entropy in bits.
double entropy_bits(const DensityMatrix& rho);

/// S(A) + S(B) − S(AB) in bits; dims default to two qubits.
double mutual_information_state(const DensityMatrix& rho_ab, int dim_a = 2, int dim_b = 2);

}  // namespace nmpt
