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

#include "nmpt/qpt.hpp"

#include <cmath>

#include "nmpt/basis.hpp"
#include "nmpt/qst.hpp"

namespace nmpt {

namespace {

CMatrix psd_part(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
  RVector w = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix trace_out_output(const CMatrix& c, int din, int dout) {
  CMatrix t = CMatrix::Zero(din, din);
  for (int i = 0; i < din; ++i)
    for (int j = 0; j < din; ++j)
      for (int a = 0; a < dout; ++a) t(i, j) += c(i * dout + a, j * dout + a);
  return t;
}

CMatrix tp_part(const CMatrix& c, int din, int dout) {
  const CMatrix gap = trace_out_output(c, din, dout) - CMatrix::Identity(din, din);
  return c - kron(gap, CMatrix::Identity(dout, dout)) / static_cast<double>(dout);
}

}  // namespace

CMatrix project_cptp(const CMatrix& choi, int din, int dout) {
  if (choi.rows() != din * dout || choi.cols() != din * dout)
    throw DimensionError("project_cptp: wrong Choi dimensions");
  CMatrix x = hermitian_part(choi);
  CMatrix p = CMatrix::Zero(x.rows(), x.cols());
  CMatrix q = p;
  for (int it = 0; it < 20000; ++it) {
    const CMatrix y = psd_part(x + p);
    p = x + p - y;
    const CMatrix xn = tp_part(y + q, din, dout);
    q = y + q - xn;
    const double change = (xn - x).cwiseAbs().maxCoeff();
    x = xn;
    if (change < 1e-13 && hermitian_eigenvalues(x)(0) > -1e-11) break;
  }
  // The last iterate is exactly trace preserving; clear residual negativity by
  // mixing in the smallest amount of the completely depolarizing map.
  const double lmin = hermitian_eigenvalues(x)(0);
  if (lmin < 0.0) {
    const double eps = -lmin * dout / (1.0 - lmin * dout);
    x = (1.0 - eps) * x +
        eps * CMatrix::Identity(x.rows(), x.cols()) / static_cast<double>(dout);
  }
  return hermitian_part(x);
}

const std::array<CMatrix, 4>& qpt_inputs() {
  static const std::array<CMatrix, 4> inputs = {
      bloch_matrix(0, 0, 1), bloch_matrix(0, 0, -1), bloch_matrix(1, 0, 0),
      bloch_matrix(0, 1, 0)};
  return inputs;
}

QuantumChannel channel_from_outputs(const std::array<CMatrix, 4>& outputs) {
  static const DualSet duals =
      build_duals(std::vector<CMatrix>(qpt_inputs().begin(), qpt_inputs().end()), 4);
  CMatrix c = CMatrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) c += kron(CMatrix(duals.duals[k].transpose()), outputs[k]);
  return QuantumChannel::from_choi(project_cptp(c, 2, 2), 2, 2);
}

QuantumChannel channel_from_qpt(const QptData& data) {
  std::array<CMatrix, 4> outs;
  for (int k = 0; k < 4; ++k) outs[k] = linear_inversion(data.records[k]);
  return channel_from_outputs(outs);
}

std::array<DensityMatrix, 4> qpt_outputs(const SEModel& model, const ControlSequence& layout) {
  const std::vector<int> dims{model.sys_dim, model.env_dim};
  const CMatrix env = partial_trace_keep(model.initial_se, 1, std::span<const int>(dims));
  std::array<DensityMatrix, 4> out{DensityMatrix::maximally_mixed(2),
                                   DensityMatrix::maximally_mixed(2),
                                   DensityMatrix::maximally_mixed(2),
                                   DensityMatrix::maximally_mixed(2)};
  for (int k = 0; k < 4; ++k) {
    SEModel m = model;
    m.initial_se = kron(qpt_inputs()[k], env);
    out[k] = run_sequence(m, layout);
  }
  return out;
}

QptData qpt_data(const SEModel& model, const ControlSequence& layout, std::int64_t shots,
                 std::uint64_t seed) {
  const auto outs = qpt_outputs(model, layout);
  QptData d;
  for (int k = 0; k < 4; ++k)
    d.records[k] = record_from_state(outs[k], shots, stream_seed(seed, k),
                                     "qpt-in" + std::to_string(k));
  return d;
}

QuantumChannel qpt(const SEModel& model, const ControlSequence& layout, std::int64_t shots,
                   std::uint64_t seed) {
  if (shots < 0) throw ConfigError("qpt: negative shots");
  if (shots == 0) return exact_channel(model, layout);
  return channel_from_qpt(qpt_data(model, layout, shots, seed));
}

QuantumChannel exact_channel(const SEModel& model, const ControlSequence& layout) {
  const auto outs = qpt_outputs(model, layout);
  std::array<CMatrix, 4> m;
  for (int k = 0; k < 4; ++k) m[k] = outs[k].matrix();
  return channel_from_outputs(m);
}

}  // namespace nmpt
