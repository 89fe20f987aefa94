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

#include "nmpt/basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "nmpt/rng.hpp"

namespace nmpt {

const std::vector<CMatrix>& preparation_unitaries() {
  static const std::vector<CMatrix> preps = [] {
    const double r = 1.0 / std::sqrt(2.0);
    CMatrix h(2, 2);
    h << r, r, r, -r;
    CMatrix s = CMatrix::Zero(2, 2);
    s(0, 0) = 1.0;
    s(1, 1) = Complex(0.0, 1.0);
    return std::vector<CMatrix>{h, s * h, pauli(0), pauli(1)};
  }();
  return preps;
}

std::vector<CMatrix> generate_haar_pool(int n, std::uint64_t seed) {
  if (n < 1) throw ConfigError("generate_haar_pool: n must be at least 1");
  Rng rng(seed);
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(haar_unitary(2, rng));
  return out;
}

ControlBasis generate_haar_basis(int n, std::uint64_t seed) {
  if (n < 1) throw ConfigError("generate_haar_basis: n must be at least 1");
  if (n > 28) throw ConfigError("generate_haar_basis: n must not exceed the pool size 28");
  ControlBasis b;
  b.preparations = preparation_unitaries();
  b.unitaries = generate_haar_pool(n, seed);
  b.seed = seed;
  b.source_index.resize(static_cast<std::size_t>(n));
  std::iota(b.source_index.begin(), b.source_index.end(), 0);
  return b;
}

CMatrix unitary_choi_state(const CMatrix& u) {
  const int d = static_cast<int>(u.rows());
  CVector v = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < d; ++a) v(i * d + a) = u(a, i);
  return v * v.adjoint() / static_cast<double>(d);
}

std::vector<double> mean_overlaps(const std::vector<CMatrix>& unitaries) {
  const std::size_t n = unitaries.size();
  if (n < 2) throw ConfigError("mean_overlaps: at least two elements required");
  std::vector<CMatrix> chois;
  for (const auto& u : unitaries) chois.push_back(unitary_choi_state(u));
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out[i] += (chois[i] * chois[j]).trace().real();
    out[i] /= static_cast<double>(n - 1);
  }
  return out;
}

std::vector<int> overlap_order(const std::vector<CMatrix>& unitaries) {
  const auto ov = mean_overlaps(unitaries);
  std::vector<int> idx(unitaries.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return ov[a] < ov[b]; });
  return idx;
}

ControlBasis order_by_overlap(const ControlBasis& basis) {
  const auto idx = overlap_order(basis.unitaries);
  ControlBasis out = basis;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out.unitaries[i] = basis.unitaries[static_cast<std::size_t>(idx[i])];
    out.source_index[i] = basis.source_index[static_cast<std::size_t>(idx[i])];
  }
  return out;
}

const std::vector<CMatrix>& hermitian_frame(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<CMatrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<CMatrix> frame;
  const double r = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < d; ++k) {
    CMatrix e = CMatrix::Zero(d, d);
    e(k, k) = 1.0;
    frame.push_back(e);
  }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMatrix s = CMatrix::Zero(d, d);
      s(j, k) = r;
      s(k, j) = r;
      frame.push_back(s);
      CMatrix a = CMatrix::Zero(d, d);
      a(j, k) = Complex(0.0, r);
      a(k, j) = Complex(0.0, -r);
      frame.push_back(a);
    }
  return cache.emplace(d, std::move(frame)).first->second;
}

RVector frame_coordinates(const CMatrix& x) {
  const int d = static_cast<int>(x.rows());
  const auto& frame = hermitian_frame(d);
  RVector v(static_cast<Eigen::Index>(frame.size()));
  for (std::size_t k = 0; k < frame.size(); ++k)
    v(static_cast<Eigen::Index>(k)) = (frame[k] * x).trace().real();
  return v;
}

CMatrix from_frame_coordinates(const RVector& v, int d) {
  const auto& frame = hermitian_frame(d);
  if (v.size() != static_cast<Eigen::Index>(frame.size()))
    throw DimensionError("from_frame_coordinates: wrong length");
  CMatrix x = CMatrix::Zero(d, d);
  for (std::size_t k = 0; k < frame.size(); ++k) x += v(static_cast<Eigen::Index>(k)) * frame[k];
  return x;
}

DualSet build_duals(const std::vector<CMatrix>& elements, int min_rank) {
  if (elements.empty()) throw ConfigError("build_duals: empty basis");
  const int d = static_cast<int>(elements[0].rows());
  RMatrix b(d * d, static_cast<Eigen::Index>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].rows() != d) throw DimensionError("build_duals: mixed element dimensions");
    b.col(static_cast<Eigen::Index>(i)) = frame_coordinates(elements[i]);
  }
  DualSet out;
  const RMatrix f = pseudo_inverse(b, kPinvCutoff, &out.rank);
  if (out.rank < min_rank)
    throw NumericalError("build_duals: basis rank " + std::to_string(out.rank) +
                         " is below the required " + std::to_string(min_rank));
  out.mode = out.rank == static_cast<int>(elements.size()) ? DualMode::Exact : DualMode::Relaxed;
  for (Eigen::Index j = 0; j < f.rows(); ++j)
    out.duals.push_back(from_frame_coordinates(f.row(j).transpose(), d));
  return out;
}

SlotBasis make_operation_slot(const std::vector<CMatrix>& unitaries) {
  SlotBasis s;
  s.kind = SlotKind::Operation;
  s.unitaries = unitaries;
  for (const auto& u : unitaries) s.elements.push_back(unitary_choi_state(u));
  const int d = unitaries.empty() ? 0 : static_cast<int>(unitaries[0].rows());
  s.duals = build_duals(s.elements, restricted_dimension(d));
  return s;
}

SlotBasis make_preparation_slot(const std::vector<CMatrix>& unitaries) {
  SlotBasis s;
  s.kind = SlotKind::Preparation;
  s.unitaries = unitaries;
  if (unitaries.empty()) throw ConfigError("make_preparation_slot: no preparations");
  const int d = static_cast<int>(unitaries[0].rows());
  std::vector<CMatrix> states;
  for (const auto& u : unitaries) {
    s.elements.push_back(unitary_choi_state(u));
    states.push_back(u.col(0) * u.col(0).adjoint());
  }
  const DualSet sd = build_duals(states, d * d);
  CMatrix ground = CMatrix::Zero(d, d);
  ground(0, 0) = static_cast<double>(d);
  s.duals.rank = sd.rank;
  s.duals.mode = sd.mode;
  for (const auto& dual : sd.duals) s.duals.duals.push_back(kron(ground, dual));
  return s;
}

}  // namespace nmpt
