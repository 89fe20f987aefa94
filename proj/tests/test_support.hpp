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

// Shared fixtures for the unit tests.

#pragma once

#include <gtest/gtest.h>

#include "nmpt/linalg.hpp"
#include "nmpt/rng.hpp"
#include "nmpt/state.hpp"

namespace nmpt::testing {

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  return (a - b).cwiseAbs().maxCoeff();
}

// Random full-rank state from a Ginibre matrix.
inline CMatrix random_state(int dim, Rng& rng) {
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  CMatrix r = g * g.adjoint();
  return r / r.trace().real();
}

inline CMatrix random_pure(int dim, Rng& rng) {
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
  v.normalize();
  return v * v.adjoint();
}

inline CMatrix ket_projector(std::initializer_list<Complex> amps) {
  CVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (Complex a : amps) v(i++) = a;
  v.normalize();
  return v * v.adjoint();
}

inline CMatrix bell_phi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return ket_projector({s, 0.0, 0.0, s});
}

}  // namespace nmpt::testing

#define EXPECT_MATRIX_NEAR(a, b, tol) \
  EXPECT_LE(::nmpt::testing::max_abs_diff((a), (b)), (tol))
