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

#include <cstdint>
#include <random>
#include <span>

#include "nmpt/linalg.hpp"

namespace nmpt {

/// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the stream (master, index). Streams are independent of the order
/// in which they are created, so batch and serial runs agree.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng stream(std::uint64_t master, std::uint64_t index) {
    return Rng(stream_seed(master, index));
  }

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  std::int64_t binomial(std::int64_t n, double p);
  std::size_t index(std::size_t n);
  /// Multinomial draw by sequential conditional binomials.
  std::vector<std::int64_t> multinomial(std::int64_t n, std::span<const double> probs);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Haar-random d×d unitary: QR of a complex Gaussian matrix, with R's
/// diagonal phases moved into Q.
CMatrix haar_unitary(int dim, Rng& rng);

}  // namespace nmpt
