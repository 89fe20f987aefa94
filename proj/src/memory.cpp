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

#include "nmpt/memory.hpp"

#include <algorithm>
#include <cmath>

namespace nmpt {

namespace {

bool has_barrier(const std::vector<int>& slots, int s) {
  return std::find(slots.begin(), slots.end(), s) != slots.end();
}

void check_slots(const std::vector<int>& slots) {
  if (slots.empty() || slots.size() > 2) throw ConfigError("memory: choose one or two barrier slots");
  for (int s : slots)
    if (s != 1 && s != 2) throw ConfigError("memory: barrier slots must be 1 or 2");
  if (slots.size() == 2 && slots[0] == slots[1]) throw ConfigError("memory: repeated barrier slot");
}

}  // namespace

double mutual_information_bits(const JointDistribution& p) {
  std::array<double, 2> pe{}, pd{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      pe[i] += p[i][j];
      pd[j] += p[i][j];
    }
  double mi = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (p[i][j] <= 0.0) continue;  // 0·log 0 := 0
      const double pij = std::clamp(p[i][j], 1e-12, 1.0);
      const double denom = std::clamp(pe[i], 1e-12, 1.0) * std::clamp(pd[j], 1e-12, 1.0);
      mi += pij * std::log2(pij / denom);
    }
  return std::max(mi, 0.0);
}

JointDistribution memory_distribution(const ProcessTensor& pt, const MemoryProbeConfig& cfg) {
  if (pt.steps() != 3) throw ConfigError("memory: tensor must have a preparation and two slots");
  check_slots(cfg.barrier_slots);
  const double psum = cfg.encoder_probs[0] + cfg.encoder_probs[1];
  if (cfg.encoder_probs[0] < 0.0 || cfg.encoder_probs[1] < 0.0 || std::abs(psum - 1.0) > 1e-12)
    throw ConfigError("memory: encoder probabilities must be non-negative and sum to 1");
  const CMatrix barrier = depolarizing_in_span().choi_state();
  const CMatrix v = unitary_choi_state(u3_matrix(cfg.v));
  const CMatrix s1 = has_barrier(cfg.barrier_slots, 1) ? barrier : v;
  const CMatrix s2 = has_barrier(cfg.barrier_slots, 2) ? barrier : v;
  const CMatrix d = u3_matrix(cfg.decoder);
  JointDistribution p{};
  for (int i = 0; i < 2; ++i) {
    const CMatrix e = unitary_choi_state(u3_matrix(cfg.encoder[static_cast<std::size_t>(i)]));
    const DensityMatrix rho = project_to_physical(contract(pt, {e, s1, s2}));
    const CMatrix out = d * rho.matrix() * d.adjoint();
    for (int j = 0; j < 2; ++j)
      p[i][j] = cfg.encoder_probs[static_cast<std::size_t>(i)] * std::max(out(j, j).real(), 0.0);
  }
  return p;
}

double cmi(const ProcessTensor& pt, const MemoryProbeConfig& cfg) {
  return mutual_information_bits(memory_distribution(pt, cfg));
}

int memory_parameter_count(const std::vector<int>& barrier_slots) {
  check_slots(barrier_slots);
  return barrier_slots.size() == 1 ? 12 : 9;
}

MemoryProbeConfig memory_config_from(const RVector& x, const std::vector<int>& barrier_slots) {
  MemoryProbeConfig c;
  c.barrier_slots = barrier_slots;
  c.encoder[0] = {x(0), x(1), x(2)};
  c.encoder[1] = {x(3), x(4), x(5)};
  c.decoder = {x(6), x(7), x(8)};
  if (x.size() >= 12) c.v = {x(9), x(10), x(11)};
  return c;
}

RVector memory_params_of(const MemoryProbeConfig& cfg) {
  const int n = memory_parameter_count(cfg.barrier_slots);
  RVector x(n);
  x << cfg.encoder[0].theta, cfg.encoder[0].phi, cfg.encoder[0].lambda, cfg.encoder[1].theta,
      cfg.encoder[1].phi, cfg.encoder[1].lambda, cfg.decoder.theta, cfg.decoder.phi,
      cfg.decoder.lambda, RVector::Zero(n - 9);
  if (n == 12) {
    x(9) = cfg.v.theta;
    x(10) = cfg.v.phi;
    x(11) = cfg.v.lambda;
  }
  return x;
}

MemoryBound maximize_cmi(const ProcessTensor& pt, const std::vector<int>& barrier_slots,
                         std::uint64_t seed, const MemoryOptions& opts,
                         const std::vector<RVector>& starts) {
  const int dim = memory_parameter_count(barrier_slots);
  auto f = [&](const RVector& x) { return -cmi(pt, memory_config_from(x, barrier_slots)); };
  const auto ms = multistart(f, dim, opts.restarts, seed, 0.0, 2.0 * kPi, opts.nm, starts);
  if (!std::isfinite(ms.best.value))
    throw NumericalError("maximize_cmi: no feasible evaluation");
  MemoryBound b;
  b.barrier_slots = barrier_slots;
  b.cmi_bits = std::min(-ms.best.value, 1.0);
  b.argmax = memory_config_from(ms.best.x, barrier_slots);
  b.restarts = static_cast<int>(ms.runs.size());
  for (const auto& r : ms.runs) b.iterations += r.iterations;
  b.evaluations = ms.total_evaluations;
  return b;
}

MemoryBound memory_bound(const Dataset& data, const std::vector<int>& order, int n,
                         const std::vector<int>& barrier_slots, std::uint64_t seed,
                         const MemoryOptions& opts) {
  MemoryBound b = maximize_cmi(build_tensor(data, order, n), barrier_slots, seed, opts);
  if (opts.resamples <= 0) return b;
  if (opts.resamples < 2) throw ConfigError("memory_bound: at least two resamples required");
  MemoryOptions warm = opts;
  warm.restarts = opts.resample_restarts;
  const RVector x0 = memory_params_of(b.argmax);
  std::vector<double> reps;
  for (int r = 0; r < opts.resamples; ++r) {
    const Dataset d = resample_dataset(data, seed, static_cast<std::uint64_t>(r));
    const MemoryBound rb = maximize_cmi(build_tensor(d, order, n), barrier_slots,
                                        stream_seed(seed, 1000000 + r), warm, {x0});
    reps.push_back(rb.cmi_bits);
  }
  b.ci = bootstrap_interval(b.cmi_bits, reps, BootstrapMethod::Basic);
  // Reflection can push the upper end past 1 bit or below the point.
  b.ci->upper = std::clamp(b.ci->upper, b.cmi_bits, 1.0);
  return b;
}

const std::vector<std::vector<int>>& barrier_placements() {
  static const std::vector<std::vector<int>> p{{1}, {2}, {1, 2}};
  return p;
}

}  // namespace nmpt
