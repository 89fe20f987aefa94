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
#include "nmpt/qpt.hpp"
#include "nmpt/qst.hpp"
#include "test_support.hpp"

namespace nmpt {
namespace {

ExperimentRecord record_with(std::int64_t shots, std::array<std::int64_t, 3> plus) {
  ExperimentRecord r;
  r.shots = shots;
  for (int a = 0; a < 3; ++a) r.counts[a] = {plus[a], shots - plus[a]};
  return r;
}

TEST(Qst, ExactGroundState) {
  const auto rho = qst_mle(record_with(100, {50, 50, 100}));
  EXPECT_MATRIX_NEAR(rho.matrix(), DensityMatrix::basis_state(2, 0).matrix(), 1e-14);
}

TEST(Qst, UnphysicalExpectationsMatchBallProjectionOracle) {
  // Oracle: brute-force minimum of the Frobenius distance over the Bloch ball,
  // refined on a shrinking grid of surface points (the target lies outside the ball).
  const Eigen::Vector3d target(1.0, 1.0, 0.0);
  double best = 1e300, bt = 0.0, bp = 0.0, span = kPi;
  double ct = kPi / 2, cp = 0.0;
  for (int level = 0; level < 12; ++level) {
    for (int i = -20; i <= 20; ++i)
      for (int j = -20; j <= 20; ++j) {
        const double th = ct + span * i / 20.0, ph = cp + span * j / 20.0;
        const Eigen::Vector3d r(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                                std::cos(th));
        const double d = (r - target).squaredNorm();
        if (d < best) best = d, bt = th, bp = ph;
      }
    ct = bt;
    cp = bp;
    span /= 4.0;
  }
  const CMatrix oracle =
      bloch_matrix(std::sin(bt) * std::cos(bp), std::sin(bt) * std::sin(bp), std::cos(bt));
  EXPECT_MATRIX_NEAR(qst_from_expectations(1.0, 1.0, 0.0).matrix(), oracle, 1e-9);
}

TEST(Qst, ExactExpectationsReproduceSimulatedState) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const CMatrix rho = testing::random_state(2, rng);
    const auto est = qst_from_expectations((pauli(1) * rho).trace().real(),
                                           (pauli(2) * rho).trace().real(),
                                           (pauli(3) * rho).trace().real());
    EXPECT_GE(fidelity(est, DensityMatrix(rho)), 1.0 - 1e-9);
  }
}

TEST(Qst, ProjectionKeepsPhysicalAndTrace) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto rho = qst_from_expectations(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(rho.matrix()).minCoeff(), -1e-12);
  }
}

TEST(Qst, RejectsMissingAxisAndZeroShots) {
  ExperimentRecord r = record_with(100, {50, 50, 50});
  r.counts[1] = {0, 0};
  EXPECT_THROW(qst_mle(r), ConfigError);
  EXPECT_THROW(qst_mle(record_with(0, {0, 0, 0})), ConfigError);
}

TEST(Qst, TwoQubitBellFromManyShots) {
  const auto bell = DensityMatrix(testing::bell_phi_plus());
  const auto rec = sample_two_qubit(bell, 200000, 5);
  EXPECT_GE(fidelity(qst_mle(rec), bell), 0.995);
  EXPECT_EQ(rec, sample_two_qubit(bell, 200000, 5));
}

TEST(Qst, ResampleKeepsShots) {
  Rng rng(6);
  const auto rec = record_with(1600, {800, 1200, 100});
  const auto r = resample(rec, rng);
  for (int a = 0; a < 3; ++a) EXPECT_EQ(r.counts[a][0] + r.counts[a][1], 1600);
}

TEST(Qpt, NoiselessRecoversGateExactly) {
  Rng rng(7);
  const SEModel m = noiseless_model(1);
  for (int t = 0; t < 10; ++t) {
    const CMatrix u = haar_unitary(2, rng);
    const auto ch = qpt(m, make_sequence({QuantumChannel::from_unitary(u)}), 0, 1);
    EXPECT_GE(process_fidelity(ch, QuantumChannel::from_unitary(u)), 1.0 - 1e-9);
  }
}

TEST(Qpt, FiniteShotsCloseToExact) {
  CouplingConfig cfg;
  cfg.interval_ns = {1000};
  cfg.env_init = EnvInit::Plus;
  const SEModel m = coupled_neighbor_model(cfg);
  const auto layout = make_sequence({QuantumChannel::identity(2)});
  const auto exact = exact_channel(m, layout);
  const auto est = qpt(m, layout, 200000, 3);
  EXPECT_GE(process_fidelity(est, exact), 0.999);
  EXPECT_LT(process_fidelity(exact, QuantumChannel::identity(2)), 1.0 - 1e-4);
}

TEST(ProjectCptp, IdempotentOnPhysicalAndFixesUnphysical) {
  Rng rng(8);
  const auto ch = QuantumChannel::from_kraus(
      {haar_unitary(2, rng) * std::sqrt(0.6), haar_unitary(2, rng) * std::sqrt(0.4)});
  EXPECT_MATRIX_NEAR(project_cptp(ch.choi(), 2, 2), ch.choi(), 1e-8);

  CMatrix bad = ch.choi();
  bad(0, 0) += 0.3;
  bad(3, 3) -= 0.5;
  const CMatrix p = project_cptp(bad, 2, 2);
  EXPECT_NO_THROW(QuantumChannel::from_choi(p, 2, 2));
  EXPECT_MATRIX_NEAR(project_cptp(p, 2, 2), p, 1e-8);
}

}  // namespace
}  // namespace nmpt
