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

#include "nmpt/qst.hpp"

namespace nmpt {

namespace {

void check_record(const ExperimentRecord& rec) {
  if (rec.shots <= 0) throw ConfigError("qst: record " + rec.id + " has no shots");
  for (std::size_t a = 0; a < 3; ++a) {
    const auto& c = rec.counts[a];
    if (c[0] < 0 || c[1] < 0 || c[0] + c[1] != rec.shots)
      throw ConfigError("qst: record " + rec.id + " is missing counts for axis " +
                        std::string(1, "XYZ"[a]));
  }
}

void check_record(const TwoQubitRecord& rec) {
  if (rec.shots <= 0) throw ConfigError("qst: record " + rec.id + " has no shots");
  for (const auto& c : rec.counts) {
    std::int64_t s = 0;
    for (auto v : c) {
      if (v < 0) throw ConfigError("qst: negative counts in " + rec.id);
      s += v;
    }
    if (s != rec.shots) throw ConfigError("qst: record " + rec.id + " is missing a setting");
  }
}

}  // namespace

std::array<double, 3> pauli_expectations(const ExperimentRecord& rec) {
  check_record(rec);
  std::array<double, 3> e{};
  for (std::size_t a = 0; a < 3; ++a)
    e[a] = static_cast<double>(rec.counts[a][0] - rec.counts[a][1]) /
           static_cast<double>(rec.shots);
  return e;
}

CMatrix linear_inversion(const ExperimentRecord& rec) {
  const auto e = pauli_expectations(rec);
  return bloch_matrix(e[0], e[1], e[2]);
}

CMatrix linear_inversion(const TwoQubitRecord& rec) {
  check_record(rec);
  const double n = static_cast<double>(rec.shots);
  // ⟨σ_i ⊗ σ_j⟩ for i, j ∈ {I, X, Y, Z}; single-qubit marginals averaged over
  // the three settings that contain them.
  double t[4][4] = {};
  t[0][0] = 1.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const auto& c = rec.counts[a * 3 + b];
      const double pp = c[0] / n, pm = c[1] / n, mp = c[2] / n, mm = c[3] / n;
      t[a + 1][b + 1] = pp - pm - mp + mm;
      t[a + 1][0] += (pp + pm - mp - mm) / 3.0;
      t[0][b + 1] += (pp - pm + mp - mm) / 3.0;
    }
  CMatrix rho = CMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho += t[i][j] * kron(pauli(i), pauli(j));
  return rho / 4.0;
}

DensityMatrix qst_mle(const ExperimentRecord& rec) {
  return project_to_physical(linear_inversion(rec));
}

DensityMatrix qst_mle(const TwoQubitRecord& rec) {
  return project_to_physical(linear_inversion(rec));
}

DensityMatrix qst_from_expectations(double x, double y, double z) {
  return project_to_physical(bloch_matrix(x, y, z));
}

ExperimentRecord resample(const ExperimentRecord& rec, Rng& rng) {
  check_record(rec);
  ExperimentRecord out = rec;
  for (auto& c : out.counts) {
    const double p = static_cast<double>(c[0]) / static_cast<double>(rec.shots);
    c[0] = rng.binomial(rec.shots, p);
    c[1] = rec.shots - c[0];
  }
  return out;
}

TwoQubitRecord resample(const TwoQubitRecord& rec, Rng& rng) {
  check_record(rec);
  TwoQubitRecord out = rec;
  for (auto& c : out.counts) {
    std::array<double, 4> p{};
    for (int o = 0; o < 4; ++o) p[o] = static_cast<double>(c[o]) / rec.shots;
    const auto draw = rng.multinomial(rec.shots, p);
    for (int o = 0; o < 4; ++o) c[o] = draw[o];
  }
  return out;
}

}  // namespace nmpt
