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

#include "nmpt/rng.hpp"

#include <algorithm>
#include <cmath>

namespace nmpt {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Rng::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

std::int64_t Rng::binomial(std::int64_t n, double p) {
  if (n <= 0) return 0;
  p = std::clamp(p, 0.0, 1.0);
  if (p == 0.0) return 0;
  if (p == 1.0) return n;
  return std::binomial_distribution<std::int64_t>(n, p)(engine_);
}

std::size_t Rng::index(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

std::vector<std::int64_t> Rng::multinomial(std::int64_t n, std::span<const double> probs) {
  std::vector<std::int64_t> out(probs.size(), 0);
  double rest = 0.0;
  for (double p : probs) rest += std::max(p, 0.0);
  std::int64_t left = n;
  for (std::size_t i = 0; i + 1 < probs.size() && left > 0; ++i) {
    const double p = std::max(probs[i], 0.0);
    const double q = rest > 0.0 ? p / rest : 0.0;
    out[i] = binomial(left, q);
    left -= out[i];
    rest -= p;
  }
  if (!probs.empty()) out.back() += left;
  return out;
}

CMatrix haar_unitary(int dim, Rng& rng) {
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    const double a = std::abs(d);
    q.col(i) *= a > 0.0 ? d / a : Complex(1.0);
  }
  return q;
}

}  // namespace nmpt
