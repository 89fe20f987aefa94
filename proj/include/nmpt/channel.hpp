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

enum class TraceClass { Preserving, NonIncreasing };

/// Linear map stored as its Choi matrix
///   choi = Σ_ij |i⟩⟨j| ⊗ ch(|i⟩⟨j|)        (input factor first).
/// The normalized Choi state is choi / dim_in.
///
/// Channels built through the checked factories are CP and TP (or trace
/// non-increasing). `linear()` builds an unchecked map; these appear as
/// linear combinations of channels inside contractions and linearity tests.
class QuantumChannel {
 public:
  QuantumChannel() = default;

  static QuantumChannel from_choi(const CMatrix& choi, int dim_in, int dim_out,
                                  TraceClass tc = TraceClass::Preserving);
  static QuantumChannel from_kraus(const std::vector<CMatrix>& kraus,
                                   TraceClass tc = TraceClass::Preserving);
  static QuantumChannel from_unitary(const CMatrix& u);
  /// Superoperator in row-major vectorization, vec(ρ)[a·d + b] = ρ(a, b).
  static QuantumChannel from_superop(const CMatrix& s, int dim_in, int dim_out,
                                     TraceClass tc = TraceClass::Preserving);
  static QuantumChannel linear(const CMatrix& choi, int dim_in, int dim_out);
  static QuantumChannel identity(int dim);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  TraceClass trace_class() const { return tc_; }
  bool checked() const { return checked_; }
  const CMatrix& choi() const { return choi_; }
  CMatrix choi_state() const { return choi_ / static_cast<double>(dim_in_); }
  CMatrix superop() const;

  /// Applies the map to an arbitrary operator.
  CMatrix apply(const CMatrix& rho) const;
  DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  QuantumChannel(CMatrix choi, int din, int dout, TraceClass tc, bool checked);
  static void validate(const CMatrix& choi, int din, int dout, TraceClass tc);

  CMatrix choi_;
  int dim_in_ = 0;
  int dim_out_ = 0;
  TraceClass tc_ = TraceClass::Preserving;
  bool checked_ = false;
};

CMatrix choi_to_superop(const CMatrix& choi, int dim_in, int dim_out);
CMatrix superop_to_choi(const CMatrix& s, int dim_in, int dim_out);

/// compose(g, f) applies f first.
QuantumChannel compose(const QuantumChannel& g, const QuantumChannel& f);

/// α·a + β·b as an unchecked linear map.
QuantumChannel combine(double alpha, const QuantumChannel& a, double beta,
                       const QuantumChannel& b);

/// Fidelity of the normalized Choi states.
double process_fidelity(const QuantumChannel& a, const QuantumChannel& b);

/// Pauli transfer matrix R_ij = tr[P_i ch(P_j)] / 2 of a qubit map.
RMatrix pauli_transfer_matrix(const QuantumChannel& ch);

/// tr(E†E)/3 where E is the unital 3×3 block of the Pauli transfer matrix.
double unitarity(const QuantumChannel& ch);

struct UnitaryParams {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
};

/// U(θ,φ,λ) = [[cos θ/2, −e^{iλ} sin θ/2], [e^{iφ} sin θ/2, e^{i(φ+λ)} cos θ/2]].
Eigen::Matrix2cd u3_matrix(const UnitaryParams& p);
QuantumChannel make_unitary(const UnitaryParams& p);

/// Rotation angle and unit axis of an SU(2)-normalized qubit unitary.
struct RotationAxisAngle {
  double angle;
  std::array<double, 3> axis;
};
RotationAxisAngle rotation_axis_angle(const CMatrix& u);

}  // namespace nmpt
