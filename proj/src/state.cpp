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

#include "nmpt/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace nmpt {

DensityMatrix::DensityMatrix(const CMatrix& m, bool subnormalized)
    : subnormalized_(subnormalized) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw DimensionError("DensityMatrix: matrix must be square and non-empty");
  if (hermiticity_defect(m) > kPhysTol)
    throw PhysicalityError("DensityMatrix: matrix is not Hermitian");
  m_ = hermitian_part(m);
  const RVector w = hermitian_eigenvalues(m_);
  if (w(0) < -kPhysTol)
    throw PhysicalityError("DensityMatrix: negative eigenvalue " + std::to_string(w(0)));
  const double tr = m_.trace().real();
  if (subnormalized ? tr > 1.0 + kPhysTol : std::abs(tr - 1.0) > kPhysTol)
    throw PhysicalityError("DensityMatrix: trace " + std::to_string(tr));
}

DensityMatrix DensityMatrix::pure(const CVector& psi) {
  const CVector v = psi / psi.norm();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis_state(int dim, int index) {
  CMatrix m = CMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix project_to_physical(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
  RVector w = es.eigenvalues();
  const Eigen::Index d = w.size();
  // Normalize the trace first, then walk from the smallest eigenvalue,
  // zeroing negatives and spreading their weight over the rest.
  const double tr = w.sum();
  if (!(std::abs(tr) > 0.0)) throw NumericalError("project_to_physical: zero trace");
  w /= tr;
  double acc = 0.0;
  Eigen::Index i = 0;
  for (; i < d; ++i) {
    const double remaining = static_cast<double>(d - i);
    if (w(i) + acc / remaining < 0.0) {
      acc += w(i);
      w(i) = 0.0;
    } else {
      break;
    }
  }
  for (Eigen::Index j = i; j < d; ++j) w(j) += acc / static_cast<double>(d - i);
  CMatrix out = es.eigenvectors() * w.cast<Complex>().asDiagonal() *
                es.eigenvectors().adjoint();
  return DensityMatrix(hermitian_part(out));
}

PauliBasisSetting PauliBasisSetting::make(Axis axis) {
  const CMatrix& p = pauli(static_cast<int>(axis) + 1);
  const CMatrix id = CMatrix::Identity(2, 2);
  return PauliBasisSetting{axis, {(id + p) * 0.5, (id - p) * 0.5}};
}

const std::array<PauliBasisSetting, 3>& pauli_settings() {
  static const std::array<PauliBasisSetting, 3> settings = {
      PauliBasisSetting::make(Axis::X), PauliBasisSetting::make(Axis::Y),
      PauliBasisSetting::make(Axis::Z)};
  return settings;
}

CMatrix bloch_matrix(double x, double y, double z) {
  return (pauli(0) + x * pauli(1) + y * pauli(2) + z * pauli(3)) * 0.5;
}

}  // namespace nmpt
