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

#include "nmpt/channel.hpp"

#include <cmath>
#include <string>

#include "nmpt/metrics.hpp"

namespace nmpt {

QuantumChannel::QuantumChannel(CMatrix choi, int din, int dout, TraceClass tc,
                               bool checked)
    : choi_(std::move(choi)), dim_in_(din), dim_out_(dout), tc_(tc), checked_(checked) {}

void QuantumChannel::validate(const CMatrix& choi, int din, int dout, TraceClass tc) {
  if (din <= 0 || dout <= 0 || choi.rows() != din * dout || choi.cols() != din * dout)
    throw DimensionError("QuantumChannel: Choi matrix has wrong dimensions");
  if (hermiticity_defect(choi) > kPhysTol)
    throw PhysicalityError("QuantumChannel: Choi matrix is not Hermitian");
  const RVector w = hermitian_eigenvalues(choi);
  if (w(0) < -kPhysTol)
    throw PhysicalityError("QuantumChannel: not completely positive (eigenvalue " +
                           std::to_string(w(0)) + ")");
  // Partial trace over the output factor.
  CMatrix tr_out = CMatrix::Zero(din, din);
  for (int i = 0; i < din; ++i)
    for (int j = 0; j < din; ++j)
      for (int a = 0; a < dout; ++a) tr_out(i, j) += choi(i * dout + a, j * dout + a);
  const CMatrix gap = CMatrix::Identity(din, din) - tr_out;
  if (tc == TraceClass::Preserving) {
    if (gap.cwiseAbs().maxCoeff() > kPhysTol)
      throw PhysicalityError("QuantumChannel: not trace preserving");
  } else if (hermitian_eigenvalues(gap)(0) < -kPhysTol) {
    throw PhysicalityError("QuantumChannel: trace increasing");
  }
}

QuantumChannel QuantumChannel::from_choi(const CMatrix& choi, int dim_in, int dim_out,
                                         TraceClass tc) {
  validate(choi, dim_in, dim_out, tc);
  return QuantumChannel(hermitian_part(choi), dim_in, dim_out, tc, true);
}

QuantumChannel QuantumChannel::from_kraus(const std::vector<CMatrix>& kraus,
                                          TraceClass tc) {
  if (kraus.empty()) throw DimensionError("from_kraus: no operators");
  const int din = static_cast<int>(kraus[0].cols());
  const int dout = static_cast<int>(kraus[0].rows());
  CMatrix s = CMatrix::Zero(dout * dout, din * din);
  for (const auto& k : kraus) {
    if (k.cols() != din || k.rows() != dout)
      throw DimensionError("from_kraus: inconsistent operator shapes");
    s += kron(k, k.conjugate());
  }
  return from_superop(s, din, dout, tc);
}

QuantumChannel QuantumChannel::from_unitary(const CMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("from_unitary: matrix not square");
  if ((u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() >
      kPhysTol)
    throw PhysicalityError("from_unitary: matrix is not unitary");
  return from_kraus({u});
}

QuantumChannel QuantumChannel::from_superop(const CMatrix& s, int dim_in, int dim_out,
                                            TraceClass tc) {
  return from_choi(superop_to_choi(s, dim_in, dim_out), dim_in, dim_out, tc);
}

QuantumChannel QuantumChannel::linear(const CMatrix& choi, int dim_in, int dim_out) {
  if (dim_in <= 0 || dim_out <= 0 || choi.rows() != dim_in * dim_out ||
      choi.cols() != dim_in * dim_out)
    throw DimensionError("QuantumChannel::linear: wrong Choi dimensions");
  return QuantumChannel(choi, dim_in, dim_out, TraceClass::Preserving, false);
}

QuantumChannel QuantumChannel::identity(int dim) {
  return from_unitary(CMatrix::Identity(dim, dim));
}

CMatrix choi_to_superop(const CMatrix& choi, int din, int dout) {
  if (choi.rows() != din * dout || choi.cols() != din * dout)
    throw DimensionError("choi_to_superop: wrong dimensions");
  CMatrix s(dout * dout, din * din);
  for (int i = 0; i < din; ++i)
    for (int j = 0; j < din; ++j)
      for (int a = 0; a < dout; ++a)
        for (int b = 0; b < dout; ++b)
          s(a * dout + b, i * din + j) = choi(i * dout + a, j * dout + b);
  return s;
}

CMatrix superop_to_choi(const CMatrix& s, int din, int dout) {
  if (s.rows() != dout * dout || s.cols() != din * din)
    throw DimensionError("superop_to_choi: wrong dimensions");
  CMatrix c(din * dout, din * dout);
  for (int i = 0; i < din; ++i)
    for (int j = 0; j < din; ++j)
      for (int a = 0; a < dout; ++a)
        for (int b = 0; b < dout; ++b)
          c(i * dout + a, j * dout + b) = s(a * dout + b, i * din + j);
  return c;
}

CMatrix QuantumChannel::superop() const { return choi_to_superop(choi_, dim_in_, dim_out_); }

CMatrix QuantumChannel::apply(const CMatrix& rho) const {
  if (rho.rows() != dim_in_ || rho.cols() != dim_in_)
    throw DimensionError("QuantumChannel::apply: input dimension mismatch");
  CMatrix out = CMatrix::Zero(dim_out_, dim_out_);
  for (int i = 0; i < dim_in_; ++i)
    for (int j = 0; j < dim_in_; ++j)
      if (rho(i, j) != Complex(0.0))
        out += rho(i, j) * choi_.block(i * dim_out_, j * dim_out_, dim_out_, dim_out_);
  return out;
}

DensityMatrix QuantumChannel::apply(const DensityMatrix& rho) const {
  return DensityMatrix(apply(rho.matrix()), tc_ == TraceClass::NonIncreasing);
}

QuantumChannel compose(const QuantumChannel& g, const QuantumChannel& f) {
  if (f.dim_out() != g.dim_in()) throw DimensionError("compose: dimension mismatch");
  const CMatrix s = g.superop() * f.superop();
  const CMatrix c = superop_to_choi(s, f.dim_in(), g.dim_out());
  if (!g.checked() || !f.checked()) return QuantumChannel::linear(c, f.dim_in(), g.dim_out());
  const TraceClass tc = (g.trace_class() == TraceClass::Preserving &&
                         f.trace_class() == TraceClass::Preserving)
                            ? TraceClass::Preserving
                            : TraceClass::NonIncreasing;
  return QuantumChannel::from_choi(hermitian_part(c), f.dim_in(), g.dim_out(), tc);
}

QuantumChannel combine(double alpha, const QuantumChannel& a, double beta,
                       const QuantumChannel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out())
    throw DimensionError("combine: dimension mismatch");
  return QuantumChannel::linear(alpha * a.choi() + beta * b.choi(), a.dim_in(), a.dim_out());
}

double process_fidelity(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out())
    throw DimensionError("process_fidelity: dimension mismatch");
  return fidelity(DensityMatrix(a.choi_state()), DensityMatrix(b.choi_state()));
}

RMatrix pauli_transfer_matrix(const QuantumChannel& ch) {
  if (ch.dim_in() != 2 || ch.dim_out() != 2)
    throw DimensionError("pauli_transfer_matrix: qubit channel required");
  RMatrix r(4, 4);
  for (int j = 0; j < 4; ++j) {
    const CMatrix out = ch.apply(pauli(j));
    for (int i = 0; i < 4; ++i) r(i, j) = 0.5 * (pauli(i) * out).trace().real();
  }
  return r;
}

double unitarity(const QuantumChannel& ch) {
  if (ch.dim_in() != 2 || ch.dim_out() != 2)
    throw DimensionError("unitarity: qubit channel required");
  if (hermitian_eigenvalues(ch.choi())(0) < -kPhysTol)
    throw PhysicalityError("unitarity: map is not completely positive");
  const RMatrix e = pauli_transfer_matrix(ch).block(1, 1, 3, 3);
  return (e.transpose() * e).trace() / 3.0;
}

Eigen::Matrix2cd u3_matrix(const UnitaryParams& p) {
  const double c = std::cos(p.theta / 2.0);
  const double s = std::sin(p.theta / 2.0);
  Eigen::Matrix2cd u;
  u(0, 0) = c;
  u(0, 1) = -std::polar(1.0, p.lambda) * s;
  u(1, 0) = std::polar(1.0, p.phi) * s;
  u(1, 1) = std::polar(1.0, p.phi + p.lambda) * c;
  return u;
}

QuantumChannel make_unitary(const UnitaryParams& p) {
  return QuantumChannel::from_unitary(u3_matrix(p));
}

RotationAxisAngle rotation_axis_angle(const CMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw DimensionError("rotation_axis_angle: 2x2 required");
  const CMatrix v = u / std::sqrt(u.determinant());
  // v = cos(a/2) I − i sin(a/2) n·σ
  double c = 0.5 * v.trace().real();
  std::array<double, 3> n{};
  for (int k = 0; k < 3; ++k) n[k] = -0.5 * (v * pauli(k + 1)).trace().imag();
  double s = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (c < 0.0) {
    c = -c;
    for (double& x : n) x = -x;
  }
  RotationAxisAngle out{2.0 * std::atan2(s, c), {0.0, 0.0, 1.0}};
  if (s > 1e-15)
    for (int k = 0; k < 3; ++k) out.axis[k] = n[k] / s;
  return out;
}

}  // namespace nmpt
