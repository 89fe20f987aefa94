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

#include "nmpt/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace nmpt {

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("fidelity: dimension mismatch");
  const CMatrix sa = psd_sqrt(a.matrix(), kPhysTol);
  const RVector w = hermitian_eigenvalues(sa * b.matrix() * sa);
  double s = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) < -kPhysTol) throw PhysicalityError("fidelity: non-positive product");
    s += std::sqrt(std::max(w(i), 0.0));
  }
  return std::clamp(s * s, 0.0, 1.0);
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("trace_distance: dimension mismatch");
  Eigen::JacobiSVD<CMatrix> svd(a - b);
  return 0.5 * svd.singularValues().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.matrix(), b.matrix());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep,
                            const std::vector<int>& dims) {
  return DensityMatrix(partial_trace_keep(rho.matrix(), keep, std::span<const int>(dims)),
                       rho.subnormalized());
}

double negativity(const DensityMatrix& rho_ab) {
  if (rho_ab.dim() != 4) throw DimensionError("negativity: two-qubit state required");
  const RVector w = hermitian_eigenvalues(partial_transpose_second(rho_ab.matrix(), 2, 2));
  double n = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) < 0.0) n -= w(i);
  return n;
}

double entropy_bits(const DensityMatrix& rho) {
  const RVector w = hermitian_eigenvalues(rho.matrix());
  double s = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) < -kPhysTol) throw PhysicalityError("entropy: negative eigenvalue");
    if (w(i) < 1e-12) continue;
    s -= w(i) * std::log2(w(i));
  }
  return s;
}

double mutual_information_state(const DensityMatrix& rho_ab, int dim_a, int dim_b) {
  const std::vector<int> dims{dim_a, dim_b};
  return entropy_bits(partial_trace(rho_ab, 0, dims)) +
         entropy_bits(partial_trace(rho_ab, 1, dims)) - entropy_bits(rho_ab);
}

}  // namespace nmpt
