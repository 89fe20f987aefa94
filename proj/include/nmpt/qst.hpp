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

#include "nmpt/simulator.hpp"

namespace nmpt {

/// Pauli expectations (x, y, z) estimated from the record.
std::array<double, 3> pauli_expectations(const ExperimentRecord& rec);

CMatrix linear_inversion(const ExperimentRecord& rec);
CMatrix linear_inversion(const TwoQubitRecord& rec);

/// Linear inversion followed by eigenvalue-truncation projection.
DensityMatrix qst_mle(const ExperimentRecord& rec);
DensityMatrix qst_mle(const TwoQubitRecord& rec);

/// Same pipeline starting from (possibly unphysical) expectations.
DensityMatrix qst_from_expectations(double x, double y, double z);

/// Bootstrap replica: every axis resampled binomially at the observed
/// frequencies with the same shot count.
ExperimentRecord resample(const ExperimentRecord& rec, Rng& rng);
TwoQubitRecord resample(const TwoQubitRecord& rec, Rng& rng);

}  // namespace nmpt
