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

#include "nmpt/evaluation.hpp"
#include "nmpt/metrics.hpp"
#include "test_support.hpp"

namespace nmpt {
namespace {

SEModel coupled(EnvInit init = EnvInit::Plus) {
  CouplingConfig cfg;
  cfg.interval_ns = {1000, 1000, 1000};
  cfg.env_init = init;
  return coupled_neighbor_model(cfg);
}

Dataset dataset(const SEModel& m, std::int64_t shots, std::uint64_t seed, std::uint64_t pool_seed = 11) {
  return simulate_dataset(m, preparation_unitaries(), generate_haar_pool(28, pool_seed), shots, seed);
}

TEST(Evaluate, NoiselessHeldOutFidelitiesAreOne) {
  const Dataset d = dataset(noiseless_model(3), 0, 1);
  const auto r = evaluate_split(d, identity_order(28), 10);
  ASSERT_EQ(r.fidelities.size(), 4u * 18u * 18u);
  for (double f : r.fidelities) EXPECT_GE(f, 1.0 - 1e-9);
}

TEST(Evaluate, HeldOutSetUsesRemainingIndices) {
  const Dataset d = dataset(noiseless_model(3), 0, 1);
  std::vector<int> order = identity_order(28);
  std::reverse(order.begin(), order.end());
  const auto keys = held_out_keys(d, order, 20);
  EXPECT_EQ(keys.size(), 4u * 8u * 8u);
  for (const auto& k : keys) {
    EXPECT_LT(k.first, 8);
    EXPECT_LT(k.second, 8);
  }
  EXPECT_THROW(evaluate_split(d, order, 28), ConfigError);
}

TEST(Evaluate, SpamChannelIsAbsorbed) {
  // A fixed non-unitary channel before measurement changes the tensor but not
  // the quality of its predictions.
  SEModel m = coupled();
  const double g = 0.1;
  CMatrix k0 = CMatrix::Zero(2, 2), k1 = CMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - g);
  k1(0, 1) = std::sqrt(g);
  m.pre_measurement = QuantumChannel::from_kraus({k0, k1});
  const Dataset with = dataset(m, 0, 1);
  const auto r = evaluate_split(with, identity_order(28), 12);
  for (double f : r.fidelities) EXPECT_GE(f, 1.0 - 1e-9);
  const Dataset without = dataset(coupled(), 0, 1);
  EXPECT_GT((build_tensor(with, identity_order(28), 12).matrix() -
             build_tensor(without, identity_order(28), 12).matrix()).norm(), 1e-3);

  const Dataset noisy_with = dataset(m, 1600, 4);
  const Dataset noisy_without = dataset(coupled(), 1600, 4);
  const auto a = bootstrap_ci(noisy_with, identity_order(28), 24, 20, 8, {}, median_fidelity_stat);
  const auto b = bootstrap_ci(noisy_without, identity_order(28), 24, 20, 8, {}, median_fidelity_stat);
  EXPECT_TRUE(a.overlaps(b)) << a.point << " vs " << b.point;
}

TEST(Evaluate, LargerBasisPredictsBetterOnSameData) {
  const Dataset d = dataset(coupled(), 1600, 3);
  const auto order = identity_order(28);
  const auto r10 = evaluate_split(d, order, 10);
  const auto r24 = evaluate_split(d, order, 24);
  EXPECT_GT(r10.mean_infidelity, r24.mean_infidelity);
}

TEST(Evaluate, MeanInfidelityNonIncreasingOnAverage) {
  const std::vector<int> sizes{10, 13, 16, 20, 24};
  std::vector<double> avg(sizes.size(), 0.0);
  const int seeds = 10;
  for (int s = 0; s < seeds; ++s) {
    const Dataset d = dataset(coupled(), 1600, 100 + s, 200 + s);
    for (std::size_t i = 0; i < sizes.size(); ++i)
      avg[i] += evaluate_split(d, identity_order(28), sizes[i]).mean_infidelity / seeds;
  }
  for (std::size_t i = 1; i < sizes.size(); ++i)
    EXPECT_LE(avg[i], avg[i - 1]) << "n = " << sizes[i];
}

TEST(Evaluate, NoisyMedianInfidelityScale) {
  const Dataset d = dataset(coupled(), 1600, 6);
  const auto r = evaluate_split(d, identity_order(28), 24);
  EXPECT_LT(r.infidelity.median, 5e-3);
}

TEST(Bootstrap, NearlyNoiselessCountsGiveNarrowInterval) {
  const Dataset d = dataset(noiseless_model(3), 1000000000000LL, 2);
  const auto ci = bootstrap_ci(d, identity_order(28), 24, 5, 3);
  EXPECT_LT(ci.upper - ci.lower, 1e-6);
}

TEST(Bootstrap, ContainsPointAndIsDeterministic) {
  const Dataset d = dataset(coupled(), 1600, 7);
  const auto a = bootstrap_ci(d, identity_order(28), 24, 30, 5);
  const auto b = bootstrap_ci(d, identity_order(28), 24, 30, 5);
  EXPECT_TRUE(a.contains(a.point));
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_EQ(a.upper, b.upper);
  EXPECT_THROW(bootstrap_ci(d, identity_order(28), 24, 1, 5), ConfigError);
}

TEST(Bootstrap, WidthScalesWithInverseRootShots) {
  // Infidelity is quadratic in state error, so the mean infidelity and its spread
  // scale as 1/shots; the interval on the median fidelity scales the same way.
  // Check the width ratio between 400 and 6400 shots is well above 1.
  const auto order = identity_order(28);
  const auto w = [&](std::int64_t shots) {
    const auto ci = bootstrap_ci(dataset(coupled(), shots, 9), order, 24, 40, 10);
    return ci.upper - ci.lower;
  };
  const double ratio = w(400) / w(6400);
  EXPECT_GT(ratio, 3.0);
  EXPECT_LT(ratio, 40.0);
}

TEST(Resample, KeepsShotsAndIsDeterministic) {
  const Dataset d = dataset(coupled(), 400, 1);
  const Dataset a = resample_dataset(d, 3, 0), b = resample_dataset(d, 3, 0);
  const Dataset c = resample_dataset(d, 3, 1);
  EXPECT_EQ(a.records, b.records);
  EXPECT_NE(a.records, c.records);
  for (const auto& r : a.records)
    for (const auto& p : r.counts) EXPECT_EQ(p[0] + p[1], 400);
}

TEST(SequenceId, Format) {
  EXPECT_EQ(sequence_id({2, 5, 17}), "p2-u5-u17");
}

}  // namespace
}  // namespace nmpt
