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

#include "nmpt/metrics.hpp"
#include "nmpt/simulator.hpp"
#include "test_support.hpp"

namespace nmpt {
namespace {

SEModel identity_model(int steps, const CMatrix& env) {
  SEModel m;
  m.env_dim = static_cast<int>(env.rows());
  m.probeable = m.env_dim == 2;
  for (int j = 0; j < steps; ++j) m.intervals.push_back({identity(2 * m.env_dim), 0.0});
  m.initial_se = kron(DensityMatrix::basis_state(2, 0).matrix(), env);
  m.validate();
  return m;
}

CMatrix plus_state() { return testing::ket_projector({1.0, 1.0}); }

std::vector<QuantumChannel> random_unitaries(int n, Rng& rng) {
  std::vector<QuantumChannel> out;
  for (int i = 0; i < n; ++i) out.push_back(QuantumChannel::from_unitary(haar_unitary(2, rng)));
  return out;
}

TEST(RunSequence, XOnGroundStateWithIdleEnvironment) {
  const SEModel m = identity_model(1, plus_state());
  const auto out = run_sequence(m, make_sequence({QuantumChannel::from_unitary(pauli(1))}));
  EXPECT_MATRIX_NEAR(out.matrix(), DensityMatrix::basis_state(2, 1).matrix(), 1e-14);
}

TEST(RunSequence, TrivialEnvironmentEqualsDirectComposition) {
  Rng rng(1);
  const SEModel m = noiseless_model(3);
  for (int t = 0; t < 20; ++t) {
    const auto ch = random_unitaries(3, rng);
    CVector psi = CVector::Zero(2);
    psi(0) = 1.0;
    CMatrix direct = psi * psi.adjoint();
    for (const auto& c : ch) direct = c.apply(direct);
    EXPECT_MATRIX_NEAR(run_sequence(m, make_sequence(ch)).matrix(), direct, 1e-13);
  }
}

TEST(RunSequence, SwapHandsOverEnvironmentState) {
  SEModel m = identity_model(1, plus_state());
  m.intervals[0].unitary = swap_gate();
  const auto out = run_sequence(m, make_sequence({QuantumChannel::identity(2)}));
  EXPECT_MATRIX_NEAR(out.matrix(), plus_state(), 1e-14);
}

TEST(RunSequence, StepCountMismatchThrows) {
  const SEModel m = noiseless_model(2);
  EXPECT_THROW(run_sequence(m, make_sequence({QuantumChannel::identity(2)})), DimensionError);
}

TEST(RunSequence, ExchangeClosedForm) {
  // X prepares |1>|0>; XX+YY swaps the excitation at rate g, ZZ adds only a phase
  // inside the single-excitation subspace: P(system in |1>) = cos^2(g t).
  for (double t : {100.0, 1000.0, 2500.0, 5000.0}) {
    CouplingConfig cfg;
    cfg.interval_ns = {t};
    const SEModel m = coupled_neighbor_model(cfg);
    const auto out = run_sequence(m, make_sequence({QuantumChannel::from_unitary(pauli(1))}));
    const double g = 2.0 * kPi * 50.0 * 1e-6;
    EXPECT_NEAR(out.matrix()(1, 1).real(), std::pow(std::cos(g * t), 2), 1e-12) << t;
  }
}

TEST(RunSequence, PhysicalAndTracePreserving) {
  Rng rng(2);
  CouplingConfig cfg;
  cfg.interval_ns = {1000, 1000, 1000};
  cfg.env_init = EnvInit::Bell;
  const SEModel m = coupled_neighbor_model(cfg);
  for (int t = 0; t < 20; ++t) {
    const CMatrix r = run_sequence_matrix(m, make_sequence(random_unitaries(3, rng)));
    EXPECT_NEAR(r.trace().real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(r).minCoeff(), -1e-9);
  }
}

TEST(RunSequence, LinearInEachSlot) {
  Rng rng(3);
  CouplingConfig cfg;
  cfg.interval_ns = {1000, 1000, 1000};
  cfg.env_init = EnvInit::Plus;
  const SEModel m = coupled_neighbor_model(cfg);
  const double alpha = 0.8, beta = -0.35;
  for (int slot = 0; slot < 3; ++slot) {
    auto base = random_unitaries(3, rng);
    const auto a = QuantumChannel::from_unitary(haar_unitary(2, rng));
    const auto b = QuantumChannel::from_unitary(haar_unitary(2, rng));
    auto with = [&](const QuantumChannel& c) {
      auto steps = base;
      steps[static_cast<std::size_t>(slot)] = c;
      return run_sequence_matrix(m, make_sequence(steps));
    };
    EXPECT_MATRIX_NEAR(with(combine(alpha, a, beta, b)), alpha * with(a) + beta * with(b), 1e-10);
  }
}

TEST(SampleCounts, PureZAndDeterminism) {
  const auto zero = DensityMatrix::basis_state(2, 0);
  const auto z = sample_counts(zero, pauli_settings()[2], 777, 5);
  EXPECT_EQ(z[0], 777);
  EXPECT_EQ(z[1], 0);
  const auto mixed = DensityMatrix::maximally_mixed(2);
  EXPECT_EQ(sample_counts(mixed, pauli_settings()[0], 1600, 9),
            sample_counts(mixed, pauli_settings()[0], 1600, 9));
  EXPECT_THROW(sample_counts(zero, pauli_settings()[0], 0, 1), ConfigError);
}

TEST(SampleCounts, LargeShotFrequencies) {
  const auto mixed = DensityMatrix::maximally_mixed(2);
  const std::int64_t n = 1000000;
  for (int a = 0; a < 3; ++a) {
    const auto c = sample_counts(mixed, pauli_settings()[a], n, 100 + a);
    EXPECT_NEAR(static_cast<double>(c[0]) / n, 0.5, 3.0 * 0.5 / std::sqrt(static_cast<double>(n)));
  }
}

TEST(SimulateExperiment, CountsSumAndConvergeToExactExpectations) {
  Rng rng(4);
  const SEModel m = noiseless_model(2);
  const auto ch = random_unitaries(2, rng);
  const std::int64_t n = 1000000;
  const auto rec = simulate_experiment(m, make_sequence(ch), n, 21);
  // Oracle: plain channel composition on |0>.
  const CMatrix rho = ch[1].apply(ch[0].apply(DensityMatrix::basis_state(2, 0).matrix()));
  for (int a = 0; a < 3; ++a) {
    EXPECT_EQ(rec.counts[a][0] + rec.counts[a][1], n);
    const double exact = (pauli(a + 1) * rho).trace().real();
    const double est = static_cast<double>(rec.counts[a][0] - rec.counts[a][1]) / n;
    const double sigma = std::sqrt((1.0 - exact * exact) / n);
    EXPECT_NEAR(est, exact, 3.0 * sigma + 1e-9) << a;
  }
  EXPECT_EQ(rec, simulate_experiment(m, make_sequence(ch), n, 21));
}

TEST(TwoQubitProbe, IdentityDynamicsKeepsProductState) {
  const SEModel m = identity_model(1, plus_state());
  SEModel mp = m;
  mp.initial_se = kron(plus_state(), plus_state());
  const auto out = two_qubit_probe(mp, make_sequence({QuantumChannel::identity(2)}));
  EXPECT_MATRIX_NEAR(out.matrix(), kron(plus_state(), plus_state()), 1e-14);
}

TEST(TwoQubitProbe, ZzCouplingEntangles) {
  // exp(-i zeta t ZZ/2) with zeta t = pi/2 maps |++> to a maximally entangled state.
  const double zeta = khz_to_rad_per_ns(30.0);
  const double t = (kPi / 2.0) / zeta;
  SEModel m;
  m.env_dim = 2;
  m.probeable = true;
  m.intervals = {{evolve(exchange_hamiltonian(0.0, zeta), t), t}};
  m.initial_se = kron(plus_state(), plus_state());
  const auto out = two_qubit_probe(m, make_sequence({QuantumChannel::identity(2)}));
  CVector psi(4);
  const Complex a = std::polar(0.5, -kPi / 4), b = std::polar(0.5, kPi / 4);
  psi << a, b, b, a;
  EXPECT_MATRIX_NEAR(out.matrix(), CMatrix(psi * psi.adjoint()), 1e-12);
  EXPECT_NEAR(negativity(out), 0.5, 1e-12);
  EXPECT_MATRIX_NEAR(partial_trace(out, 0, {2, 2}).matrix(),
                     run_sequence(m, make_sequence({QuantumChannel::identity(2)})).matrix(), 1e-14);
}

TEST(TwoQubitProbe, RejectsNonProbeableEnvironment) {
  EXPECT_THROW(two_qubit_probe(noiseless_model(1), make_sequence({QuantumChannel::identity(2)})),
               ConfigError);
}

TEST(Models, MarkovianResetForgetsSystemHistory) {
  // Two different first gates leave no trace in the environment the next interval sees:
  // the output after a fixed second gate depends only on the state just before it.
  CouplingConfig cfg;
  cfg.interval_ns = {1000, 1000};
  const SEModel m = markovian_reset_model(cfg);
  EXPECT_EQ(m.env_dim, 8);
  const auto x = QuantumChannel::from_unitary(pauli(1));
  const auto id = QuantumChannel::identity(2);
  const CMatrix out = run_sequence(m, make_sequence({x, id})).matrix();
  // Oracle: one-step channel of a fresh coupled model applied twice.
  CouplingConfig one;
  one.interval_ns = {1000};
  const SEModel step = coupled_neighbor_model(one);
  const CMatrix mid = run_sequence(step, make_sequence({x})).matrix();
  SEModel step2 = step;
  step2.initial_se = kron(mid, DensityMatrix::basis_state(2, 0).matrix());
  EXPECT_MATRIX_NEAR(out, run_sequence(step2, make_sequence({id})).matrix(), 1e-12);
}

}  // namespace
}  // namespace nmpt
