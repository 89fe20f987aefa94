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

#include <array>

#include "nmpt/linalg.hpp"
#include "test_support.hpp"

namespace nmpt {
namespace {

using testing::max_abs_diff;

TEST(Kron, MatchesElementwiseDefinition) {
  Rng rng(5);
  CMatrix a = CMatrix::Random(2, 3), b = CMatrix::Random(3, 2);
  const CMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 2; ++q) EXPECT_EQ(k(i * 3 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(PartialTrace, ProductStateKeepsEachFactor) {
  Rng rng(7);
  const CMatrix a = testing::random_state(2, rng), b = testing::random_state(3, rng);
  const std::array<int, 2> dims{2, 3};
  EXPECT_MATRIX_NEAR(partial_trace_keep(kron(a, b), 0, dims), a, 1e-14);
  EXPECT_MATRIX_NEAR(partial_trace_keep(kron(a, b), 1, dims), b, 1e-14);
}

TEST(PartialTrace, MiddleFactorOfThree) {
  Rng rng(8);
  const CMatrix a = testing::random_state(2, rng), b = testing::random_state(2, rng),
                c = testing::random_state(2, rng);
  const std::array<int, 3> dims{2, 2, 2};
  EXPECT_MATRIX_NEAR(partial_trace_keep(kron(kron(a, b), c), 1, dims), b, 1e-14);
}

TEST(PartialTrace, RejectsInconsistentDims) {
  const std::array<int, 2> dims{2, 3};
  EXPECT_THROW(partial_trace_keep(CMatrix::Identity(4, 4), 0, dims), DimensionError);
  EXPECT_THROW(partial_trace_keep(CMatrix::Identity(6, 6), 2, dims), DimensionError);
}

TEST(PartialTranspose, SwapsSecondFactorIndices) {
  const CMatrix a = CMatrix::Random(2, 2), b = CMatrix::Random(2, 2);
  EXPECT_MATRIX_NEAR(partial_transpose_second(kron(a, b), 2, 2), kron(a, CMatrix(b.transpose())),
                     1e-15);
}

TEST(PseudoInverse, PenroseConditions) {
  Rng rng(3);
  CMatrix m(5, 3);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
  m.col(2) = m.col(0) + 2.0 * m.col(1);  // rank 2
  int rank = 0;
  const CMatrix p = pseudo_inverse(m, 1e-10, &rank);
  EXPECT_EQ(rank, 2);
  EXPECT_MATRIX_NEAR(m * p * m, m, 1e-12);
  EXPECT_MATRIX_NEAR(p * m * p, p, 1e-12);
  EXPECT_LE(hermiticity_defect(m * p), 1e-12);
  EXPECT_LE(hermiticity_defect(p * m), 1e-12);
}

TEST(PseudoInverse, RealOverdeterminedLeastSquares) {
  RMatrix a(4, 2);
  a << 1, 0, 1, 1, 1, 2, 1, 3;
  RVector y(4);
  y << 1, 3, 5, 7;  // exactly 1 + 2x
  const RVector x = pseudo_inverse(a, 1e-10) * y;
  EXPECT_NEAR(x(0), 1.0, 1e-12);
  EXPECT_NEAR(x(1), 2.0, 1e-12);
}

TEST(MatrixExp, PauliZClosedForm) {
  const double t = 0.37;
  const CMatrix u = matrix_exp_hermitian(pauli(3), t);
  EXPECT_NEAR(std::abs(u(0, 0) - std::polar(1.0, -t)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(u(1, 1) - std::polar(1.0, t)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(u(0, 1)), 0.0, 1e-14);
}

TEST(MatrixExp, AgreesWithTaylorSeries) {
  Rng rng(11);
  CMatrix h = testing::random_state(4, rng) * 3.0;
  h(0, 1) += Complex(0.2, -0.4);
  h(1, 0) += Complex(0.2, 0.4);
  const double t = 0.8;
  CMatrix term = CMatrix::Identity(4, 4), sum = term;
  for (int k = 1; k < 60; ++k) {
    term = term * (h * Complex(0.0, -t)) / static_cast<double>(k);
    sum += term;
  }
  EXPECT_MATRIX_NEAR(matrix_exp_hermitian(h, t), sum, 1e-12);
}

TEST(PsdSqrt, SquaresBackAndRejectsNegative) {
  Rng rng(2);
  const CMatrix r = testing::random_state(3, rng);
  const CMatrix s = psd_sqrt(r, 1e-9);
  EXPECT_MATRIX_NEAR(s * s, r, 1e-13);
  EXPECT_THROW(psd_sqrt(-CMatrix::Identity(2, 2), 1e-9), PhysicalityError);
}

TEST(Eigenvalues, TraceAndDeterminantOfPaulis) {
  for (int i = 1; i <= 3; ++i) {
    const RVector w = hermitian_eigenvalues(pauli(i));
    EXPECT_NEAR(w.minCoeff(), -1.0, 1e-14);
    EXPECT_NEAR(w.maxCoeff(), 1.0, 1e-14);
  }
}

TEST(Pauli, AlgebraAndRange) {
  const Complex i1(0.0, 1.0);
  EXPECT_MATRIX_NEAR(pauli(1) * pauli(2), i1 * pauli(3), 1e-15);
  EXPECT_THROW(pauli(4), DimensionError);
}

}  // namespace
}  // namespace nmpt
