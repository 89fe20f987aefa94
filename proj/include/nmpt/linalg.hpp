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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nmpt/errors.hpp"

namespace nmpt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

template <typename Scalar>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kPi = 3.14159265358979323846;

/// Kronecker product a ⊗ b; first factor indexes the most significant digit.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Out =
      Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Out out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Derived>
typename Derived::PlainObject dagger(const Eigen::MatrixBase<Derived>& m) {
  return m.adjoint();
}

/// Largest absolute element of m − m†.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
typename Derived::PlainObject hermitian_part(const Eigen::MatrixBase<Derived>& m) {
  return (m + m.adjoint()) * 0.5;
}

/// Trace over all factors except `keep`; `dims` lists the factor dimensions
/// in kron order.
template <typename Derived>
typename Derived::PlainObject partial_trace_keep(const Eigen::MatrixBase<Derived>& m,
                                                 std::size_t keep,
                                                 std::span<const int> dims) {
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d <= 0) throw DimensionError("partial_trace: factor dimensions must be positive");
    total *= d;
  }
  if (keep >= dims.size())
    throw DimensionError("partial_trace: kept subsystem index out of range");
  if (m.rows() != total || m.cols() != total)
    throw DimensionError("partial_trace: factor dimensions do not match matrix size");
  Eigen::Index before = 1;
  for (std::size_t i = 0; i < keep; ++i) before *= dims[i];
  const Eigen::Index kept = dims[keep];
  const Eigen::Index after = total / (before * kept);
  typename Derived::PlainObject out =
      Derived::PlainObject::Zero(kept, kept);
  for (Eigen::Index a = 0; a < before; ++a) {
    for (Eigen::Index c = 0; c < after; ++c) {
      for (Eigen::Index i = 0; i < kept; ++i) {
        for (Eigen::Index j = 0; j < kept; ++j) {
          out(i, j) += m((a * kept + i) * after + c, (a * kept + j) * after + c);
        }
      }
    }
  }
  return out;
}

/// Partial transpose of the second factor of a (da·db)-dimensional operator.
template <typename Derived>
typename Derived::PlainObject partial_transpose_second(
    const Eigen::MatrixBase<Derived>& m, int da, int db) {
  if (m.rows() != da * db || m.cols() != da * db)
    throw DimensionError("partial_transpose: dimensions do not match");
  typename Derived::PlainObject out(m.rows(), m.cols());
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int c = 0; c < da; ++c)
        for (int d = 0; d < db; ++d)
          out(a * db + b, c * db + d) = m(a * db + d, c * db + b);
  return out;
}

/// Moore–Penrose pseudoinverse with singular values below
/// `relative_cutoff`·σ_max treated as zero. Also reports the numerical rank.
CMatrix pseudo_inverse(const CMatrix& m, double relative_cutoff, int* rank = nullptr);
RMatrix pseudo_inverse(const RMatrix& m, double relative_cutoff, int* rank = nullptr);

/// Eigenvalues of a Hermitian matrix, ascending.
RVector hermitian_eigenvalues(const CMatrix& m);

/// Principal square root of a Hermitian PSD matrix; eigenvalues in
/// [-clamp_tolerance, 0) are clamped, lower ones throw PhysicalityError.
CMatrix psd_sqrt(const CMatrix& m, double clamp_tolerance);

CMatrix matrix_exp_hermitian(const CMatrix& hamiltonian, double time);

CMatrix identity(int dim);

/// Pauli matrices indexed 0..3 as I, X, Y, Z.
const CMatrix& pauli(int index);

}  // namespace nmpt
