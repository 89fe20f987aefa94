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

#include "nmpt/linalg.hpp"

#include <array>
#include <cmath>

namespace nmpt {

namespace {

template <typename Matrix>
Matrix pinv_impl(const Matrix& m, double relative_cutoff, int* rank) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  const double cut = relative_cutoff * smax;
  int r = 0;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut && s(i) > 0.0) {
      inv(i) = 1.0 / s(i);
      ++r;
    }
  }
  if (rank) *rank = r;
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

}  // namespace

CMatrix pseudo_inverse(const CMatrix& m, double relative_cutoff, int* rank) {
  return pinv_impl(m, relative_cutoff, rank);
}

RMatrix pseudo_inverse(const RMatrix& m, double relative_cutoff, int* rank) {
  return pinv_impl(m, relative_cutoff, rank);
}

RVector hermitian_eigenvalues(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

CMatrix psd_sqrt(const CMatrix& m, double clamp_tolerance) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
  RVector w = es.eigenvalues();
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) < -clamp_tolerance)
      throw PhysicalityError("psd_sqrt: eigenvalue " + std::to_string(w(i)) +
                             " below clamping tolerance");
    w(i) = w(i) < 0.0 ? 0.0 : std::sqrt(w(i));
  }
  return es.eigenvectors() * w.cast<Complex>().asDiagonal() *
         es.eigenvectors().adjoint();
}

CMatrix matrix_exp_hermitian(const CMatrix& hamiltonian, double time) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(hamiltonian));
  const RVector& w = es.eigenvalues();
  CVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    phases(i) = std::polar(1.0, -w(i) * time);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix identity(int dim) { return CMatrix::Identity(dim, dim); }

const CMatrix& pauli(int index) {
  static const std::array<CMatrix, 4> paulis = [] {
    std::array<CMatrix, 4> p;
    const Complex i1(0.0, 1.0);
    p[0] = CMatrix::Identity(2, 2);
    p[1] = CMatrix::Zero(2, 2);
    p[1](0, 1) = 1.0;
    p[1](1, 0) = 1.0;
    p[2] = CMatrix::Zero(2, 2);
    p[2](0, 1) = -i1;
    p[2](1, 0) = i1;
    p[3] = CMatrix::Zero(2, 2);
    p[3](0, 0) = 1.0;
    p[3](1, 1) = -1.0;
    return p;
  }();
  if (index < 0 || index > 3) throw DimensionError("pauli: index must be 0..3");
  return paulis[static_cast<std::size_t>(index)];
}

}  // namespace nmpt
