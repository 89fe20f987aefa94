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

#include "nmpt/markov.hpp"
#include "nmpt/metrics.hpp"
#include "test_support.hpp"

namespace nmpt {
namespace {

const StepModelFactory kNoiseless = [](double) { return noiseless_model(1); };

CouplingConfig coupling(EnvInit init) {
  CouplingConfig cfg;
  cfg.env_init = init;
  return cfg;
}

TEST(Characterize, NoiselessRecoversIdealGates) {
  const auto pool = generate_haar_pool(6, 3);
  for (std::int64_t shots : {0, 1000000}) {
    const auto mm = characterize_gates(kNoiseless, preparation_unitaries(), pool, {72, 928}, shots, 4);
    // Radial shot noise on pure outputs costs fidelity of order 1/sqrt(shots).
    const double tol = shots == 0 ? 1e-9 : 3e-3;
    for (std::size_t i = 0; i < pool.size(); ++i)
      EXPECT_GE(process_fidelity(mm.pool[i], QuantumChannel::from_unitary(pool[i])), 1.0 - tol);
    EXPECT_GE(process_fidelity(mm.idles.at(928.0), QuantumChannel::identity(2)), 1.0 - tol);
  }
}

TEST(Characterize, IdentityUnderCouplingMatchesTracedDynamics) {
  const auto cfg = coupling(EnvInit::Plus);
  const auto mm = characterize_gates(step_model_factory(cfg), preparation_unitaries(),
                                     {identity(2)}, {72, 928}, 0, 1);
  // Oracle Choi: sum_ij |i><j| (x) tr_E[U (|i><j| (x) |+><+|) U†] with U for 928 ns.
  const CMatrix u = evolve(exchange_hamiltonian(khz_to_rad_per_ns(50), khz_to_rad_per_ns(30)), 928.0);
  const CMatrix env = testing::ket_projector({1.0, 1.0});
  CMatrix choi = CMatrix::Zero(4, 4);
  const std::array<int, 2> dims{2, 2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CMatrix e = CMatrix::Zero(2, 2);
      e(i, j) = 1.0;
      choi += kron(e, partial_trace_keep(CMatrix(u * kron(e, env) * u.adjoint()), 0, dims));
    }
  EXPECT_MATRIX_NEAR(mm.idles.at(928.0).choi(), choi, 1e-8);
  EXPECT_LT(process_fidelity(mm.idles.at(928.0), QuantumChannel::identity(2)), 1.0 - 1e-3);
}

TEST(Characterize, ChannelsAreCptp) {
  const auto mm = characterize_gates(step_model_factory(coupling(EnvInit::Zero)),
                                     preparation_unitaries(), generate_haar_pool(5, 2), {72, 928},
                                     400, 6);
  for (const auto& c : mm.pool) EXPECT_NO_THROW(QuantumChannel::from_choi(c.choi(), 2, 2));
  EXPECT_NO_THROW(QuantumChannel::from_choi(mm.idles.at(928.0).choi(), 2, 2));
}

TEST(PredictMarkov, NoiselessAgreesWithTensor) {
  const auto pool = generate_haar_pool(28, 11);
  const Dataset d = simulate_dataset(noiseless_model(3), preparation_unitaries(), pool, 0, 1);
  const auto order = identity_order(28);
  const auto split = evaluate_split(d, order, 20);
  const auto mm = characterize_gates(kNoiseless, preparation_unitaries(), pool, {72, 928}, 0, 1);
  const auto mf = markov_fidelities(mm, d, split.held_out);
  ASSERT_EQ(mf.size(), split.fidelities.size());
  for (std::size_t i = 0; i < mf.size(); ++i) EXPECT_NEAR(mf[i], split.fidelities[i], 1e-6);
}

TEST(PredictMarkov, OrderMattersUnlessGatesCommute) {
  const auto pool = std::vector<CMatrix>{pauli(1), pauli(3), u3_matrix({0.3, 0.0, 0.0})};
  const auto mm = characterize_gates(kNoiseless, preparation_unitaries(), pool, {72, 928}, 0, 1);
  const auto p = [&](int a, int b) {
    return predict_markov(mm, {{GateKind::Preparation, 0}, {GateKind::Pool, a}, {GateKind::Pool, b}})
        .matrix();
  };
  EXPECT_GT(testing::max_abs_diff(p(1, 2), p(2, 1)), 0.1);  // Z and Ry(0.3)
  const auto q = [&](int a, int b) {
    return predict_markov(mm, {{GateKind::Preparation, 2}, {GateKind::Pool, a}, {GateKind::Pool, b}})
        .matrix();
  };
  EXPECT_MATRIX_NEAR(q(0, 1), q(1, 0), 1e-12);  // XZ = -ZX: same channel
}

TEST(PredictMarkov, UnknownGateThrows) {
  const auto mm = characterize_gates(kNoiseless, preparation_unitaries(), {pauli(1)}, {72, 928}, 0, 1);
  EXPECT_THROW(predict_markov(mm, {{GateKind::Pool, 3}}), ConfigError);
}

TEST(PredictMarkov, PredictionsArePhysical) {
  const auto pool = generate_haar_pool(8, 5);
  const auto mm = characterize_gates(step_model_factory(coupling(EnvInit::Plus)),
                                     preparation_unitaries(), pool, {72, 928}, 1600, 2);
  for (int p = 0; p < 4; ++p)
    for (int a = 0; a < 8; ++a) {
      const auto rho = predict_markov(mm, {{GateKind::Preparation, p}, {GateKind::Pool, a}, {GateKind::Pool, 7 - a}});
      EXPECT_NEAR(rho.trace(), 1.0, 1e-9);
      EXPECT_GE(hermitian_eigenvalues(rho.matrix()).minCoeff(), -1e-9);
    }
}

TEST(Compare, IdenticalInputsGiveZeroDeltas) {
  const std::vector<double> f{0.99, 0.98, 0.995, 0.97};
  const auto c = compare(f, f);
  for (double d : c.deltas) EXPECT_EQ(d, 0.0);
  EXPECT_EQ(c.delta.median, 0.0);
  EXPECT_THROW(compare(f, {0.9}), ConfigError);
}

TEST(Compare, MediansMatchSortOracle) {
  Rng rng(8);
  std::vector<double> a(37), b(37);
  for (auto& x : a) x = 1.0 - 1e-3 * rng.uniform();
  for (auto& x : b) x = 1.0 - 1e-2 * rng.uniform();
  const auto c = compare(a, b);
  auto sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  EXPECT_EQ(c.tensor.median, sa[18]);
  EXPECT_EQ(c.markov.median, sb[18]);
}

}  // namespace
}  // namespace nmpt
