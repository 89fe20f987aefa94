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
#include "nmpt/process_tensor.hpp"
#include "test_support.hpp"

namespace nmpt {
namespace {

Dataset coupled_dataset(std::int64_t shots, int pool_size, EnvInit init = EnvInit::Plus) {
  CouplingConfig cfg;
  cfg.interval_ns = {1000, 1000, 1000};
  cfg.env_init = init;
  return simulate_dataset(coupled_neighbor_model(cfg), preparation_unitaries(),
                          generate_haar_pool(pool_size, 21), shots, 5);
}

std::vector<CMatrix> chois_of(const std::vector<CMatrix>& us) {
  std::vector<CMatrix> out;
  for (const auto& u : us) out.push_back(unitary_choi_state(u));
  return out;
}

TEST(ProcessTensor, TwoStepDimensionIs128) {
  const Dataset d = coupled_dataset(0, 10);
  const ProcessTensor pt = build_tensor(d, identity_order(10), 10);
  EXPECT_EQ(pt.matrix().rows(), 128);
  EXPECT_EQ(pt.steps(), 3);
}

TEST(ProcessTensor, ExactModeReproducesTrainingStates) {
  // Holds for measured (noisy) states too: duality makes the fit an interpolation.
  for (std::int64_t shots : {0, 1600}) {
    const Dataset d = coupled_dataset(shots, 10);
    const ProcessTensor pt = build_tensor(d, identity_order(10), 10);
    const auto& preps = preparation_unitaries();
    for (int p = 0; p < 4; ++p)
      for (int j = 0; j < 10; ++j)
        for (int k = 0; k < 10; ++k) {
          const CMatrix pred = contract(pt, chois_of({preps[p], d.pool[j], d.pool[k]}));
          EXPECT_MATRIX_NEAR(pred, d.states[d.index(p, j, k)], 1e-9);
        }
  }
}

TEST(ProcessTensor, NoiselessPredictsUnseenUnitaries) {
  const SEModel m = noiseless_model(3);
  const Dataset d = simulate_dataset(m, preparation_unitaries(), generate_haar_pool(12, 2), 0, 1);
  const ProcessTensor pt = build_tensor(d, identity_order(12), 12);
  Rng rng(99);
  for (int t = 0; t < 50; ++t) {
    const CMatrix a = haar_unitary(2, rng), b = haar_unitary(2, rng), c = haar_unitary(2, rng);
    const auto seq = make_sequence({QuantumChannel::from_unitary(a), QuantumChannel::from_unitary(b),
                                    QuantumChannel::from_unitary(c)});
    const DensityMatrix truth = run_sequence(m, seq);
    EXPECT_GE(fidelity(project_to_physical(contract(pt, seq)), truth), 1.0 - 1e-9);
  }
}

TEST(ProcessTensor, ContractionEqualsExpansionSum) {
  const Dataset d = coupled_dataset(1600, 14);
  const ProcessTensor pt = build_tensor(d, identity_order(14), 14);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto c = chois_of({haar_unitary(2, rng), haar_unitary(2, rng), haar_unitary(2, rng)});
    EXPECT_MATRIX_NEAR(contract(pt, c), contract_by_expansion(pt, c), 1e-10);
  }
}

TEST(ProcessTensor, LinearInEachSlot) {
  const Dataset d = coupled_dataset(1600, 12);
  const ProcessTensor pt = build_tensor(d, identity_order(12), 12);
  Rng rng(6);
  const double alpha = 0.3, beta = 1.7;
  for (std::size_t slot = 0; slot < 3; ++slot) {
    auto base = chois_of({haar_unitary(2, rng), haar_unitary(2, rng), haar_unitary(2, rng)});
    const CMatrix a = unitary_choi_state(haar_unitary(2, rng));
    const CMatrix b = unitary_choi_state(haar_unitary(2, rng));
    auto with = [&](const CMatrix& c) {
      auto x = base;
      x[slot] = c;
      return contract(pt, x);
    };
    EXPECT_MATRIX_NEAR(with(alpha * a + beta * b), alpha * with(a) + beta * with(b), 1e-9);
  }
}

TEST(ProcessTensor, AssembleIsLinearInStates) {
  const Dataset d1 = coupled_dataset(1600, 10);
  Dataset d2 = d1;
  for (auto& s : d2.states) s = s * 0.5 + CMatrix::Identity(2, 2) * 0.25;
  Dataset d3 = d1;
  for (std::size_t i = 0; i < d3.states.size(); ++i) d3.states[i] = 2.0 * d1.states[i] - d2.states[i];
  const auto o = identity_order(10);
  const CMatrix lhs = build_tensor(d3, o, 10).matrix();
  const CMatrix rhs = 2.0 * build_tensor(d1, o, 10).matrix() - build_tensor(d2, o, 10).matrix();
  EXPECT_MATRIX_NEAR(lhs, rhs, 1e-10);
}

TEST(ProcessTensor, SlotCountMismatchThrows) {
  const Dataset d = coupled_dataset(0, 10);
  const ProcessTensor pt = build_tensor(d, identity_order(10), 10);
  EXPECT_THROW(contract(pt, chois_of({pauli(0), pauli(0)})), DimensionError);
}

TEST(ProcessTensor, AssembleRejectsMissingCombination) {
  const auto slot = make_operation_slot(generate_haar_pool(10, 1));
  std::vector<CMatrix> states(99, CMatrix::Identity(2, 2) / 2.0);
  EXPECT_THROW(assemble({slot, slot}, states, 2), ConfigError);
}

TEST(Depolarizing, MapsEverythingToMaximallyMixed) {
  Rng rng(7);
  const auto& r = depolarizing_in_span();
  for (int t = 0; t < 100; ++t)
    EXPECT_MATRIX_NEAR(r.channel.apply(testing::random_state(2, rng)), identity(2) / 2.0, 1e-14);
}

TEST(Depolarizing, ChoiMatrices) {
  // Oracle: average of the four Pauli-conjugation Choi matrices.
  CMatrix avg = CMatrix::Zero(4, 4);
  for (int p = 0; p < 4; ++p) avg += QuantumChannel::from_unitary(pauli(p)).choi() / 4.0;
  const auto& r = depolarizing_in_span();
  EXPECT_MATRIX_NEAR(r.channel.choi(), avg, 1e-14);
  EXPECT_MATRIX_NEAR(r.channel.choi(), identity(4) / 2.0, 1e-14);
  EXPECT_MATRIX_NEAR(r.channel.choi_state(), identity(4) / 4.0, 1e-14);
  EXPECT_MATRIX_NEAR(r.choi_state(), identity(4) / 4.0, 1e-14);
}

TEST(Depolarizing, ContractionAveragesPauliContractions) {
  const Dataset d = coupled_dataset(1600, 16);
  const ProcessTensor pt = build_tensor(d, identity_order(16), 16);
  const auto& r = depolarizing_in_span();
  Rng rng(8);
  const CMatrix prep = unitary_choi_state(preparation_unitaries()[0]);
  const CMatrix v = unitary_choi_state(haar_unitary(2, rng));
  CMatrix avg = CMatrix::Zero(2, 2);
  for (int p = 0; p < 4; ++p) avg += contract(pt, {prep, unitary_choi_state(pauli(p)), v}) / 4.0;
  EXPECT_MATRIX_NEAR(contract(pt, {prep, r.choi_state(), v}), avg, 1e-10);
}

}  // namespace
}  // namespace nmpt
