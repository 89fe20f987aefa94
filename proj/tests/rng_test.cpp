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

#include <numeric>
#include <set>

#include "nmpt/basis.hpp"
#include "test_support.hpp"

namespace nmpt {
namespace {

TEST(Rng, SameSeedSameSequence) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.uniform(), b.uniform());
  EXPECT_EQ(Rng(9).binomial(1000, 0.3), Rng(9).binomial(1000, 0.3));
}

TEST(Rng, StreamsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(stream_seed(7, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(stream_seed(7, 0), stream_seed(8, 0));
  EXPECT_EQ(stream_seed(7, 5), stream_seed(7, 5));
}

TEST(Rng, MultinomialSumsToTrials) {
  Rng rng(3);
  const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
  for (int t = 0; t < 50; ++t) {
    const auto c = rng.multinomial(1000, p);
    EXPECT_EQ(std::accumulate(c.begin(), c.end(), std::int64_t{0}), 1000);
  }
}

TEST(Rng, BinomialEdgeProbabilities) {
  Rng rng(4);
  EXPECT_EQ(rng.binomial(500, 0.0), 0);
  EXPECT_EQ(rng.binomial(500, 1.0), 500);
}

TEST(Haar, DrawsAreUnitary) {
  Rng rng(5);
  for (int d : {2, 4}) {
    for (int t = 0; t < 100; ++t) {
      const CMatrix u = haar_unitary(d, rng);
      EXPECT_MATRIX_NEAR(CMatrix(u.adjoint() * u), identity(d), 1e-12);
    }
  }
}

TEST(Haar, SecondMomentOfTrace) {
  // Monte-Carlo oracle: E|tr U|^2 = 1 for Haar U(d), so |tr U|^2/d averages 1/d.
  // Var|tr U|^2 = 1 for d >= 2, giving a standard error of 1/(d sqrt(N)).
  Rng rng(6);
  const int n = 10000;
  for (int d : {2, 3}) {
    double s = 0.0;
    for (int t = 0; t < n; ++t) s += std::norm(haar_unitary(d, rng).trace()) / d;
    const double mean = s / n;
    EXPECT_NEAR(mean, 1.0 / d, 3.0 / (d * std::sqrt(static_cast<double>(n))));
  }
}

TEST(Haar, PhaseFixedDiagonalIsUniform) {
  // Without the phase fix, QR leaves arg(U_00) biased; Haar measure makes it uniform.
  Rng rng(7);
  const int n = 8000;
  double c = 0.0, s = 0.0;
  for (int t = 0; t < n; ++t) {
    const Complex u00 = haar_unitary(2, rng)(0, 0);
    c += std::cos(std::arg(u00));
    s += std::sin(std::arg(u00));
  }
  const double tol = 3.0 * std::sqrt(0.5 / n);
  EXPECT_NEAR(c / n, 0.0, tol);
  EXPECT_NEAR(s / n, 0.0, tol);
}

TEST(Haar, PoolIsDeterministic) {
  const auto a = generate_haar_pool(28, 11), b = generate_haar_pool(28, 11);
  ASSERT_EQ(a.size(), 28u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  EXPECT_NE(generate_haar_pool(1, 12)[0], a[0]);
}

}  // namespace
}  // namespace nmpt
