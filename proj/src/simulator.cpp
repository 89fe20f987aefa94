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

#include "nmpt/simulator.hpp"

#include <cmath>

namespace nmpt {

namespace {

double unitarity_defect(const CMatrix& u) {
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

// Applies a system-only map (Choi form) to a joint operator.
CMatrix apply_on_system(const QuantumChannel& ch, const CMatrix& rho, int env_dim) {
  const int ds = ch.dim_in();
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  const CMatrix& c = ch.choi();
  for (int i = 0; i < ds; ++i)
    for (int j = 0; j < ds; ++j) {
      const auto rblk = rho.block(i * env_dim, j * env_dim, env_dim, env_dim);
      for (int a = 0; a < ds; ++a)
        for (int b = 0; b < ds; ++b) {
          const Complex w = c(i * ds + a, j * ds + b);
          if (w != Complex(0.0)) out.block(a * env_dim, b * env_dim, env_dim, env_dim) += w * rblk;
        }
    }
  return out;
}

// Unitary on qubits (q0 = system, q) of a system ⊗ 3-qubit environment register.
CMatrix embed_two_qubit(const CMatrix& u, int env_qubit, int env_qubits) {
  const int n = env_qubits + 1;
  const int dim = 1 << n;
  CMatrix out = CMatrix::Zero(dim, dim);
  const int sa = n - 1;               // bit position of the system
  const int sb = n - 2 - env_qubit;   // bit position of the environment qubit
  for (int col = 0; col < dim; ++col) {
    const int a = (col >> sa) & 1;
    const int b = (col >> sb) & 1;
    const int in = a * 2 + b;
    for (int o = 0; o < 4; ++o) {
      const Complex w = u(o, in);
      if (w == Complex(0.0)) continue;
      int row = col & ~(1 << sa) & ~(1 << sb);
      row |= ((o >> 1) & 1) << sa;
      row |= (o & 1) << sb;
      out(row, col) += w;
    }
  }
  return out;
}

CMatrix env_qubit_state(EnvInit init) {
  CVector e(2);
  if (init == EnvInit::Plus) {
    e << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  } else {
    e << 1.0, 0.0;
  }
  return e * e.adjoint();
}

}  // namespace

void SEModel::validate() const {
  if (sys_dim != 2) throw DimensionError("SEModel: system must be a qubit");
  if (env_dim < 1 || env_dim > 8 || (env_dim & (env_dim - 1)) != 0)
    throw DimensionError("SEModel: env_dim must be a power of two up to 8");
  const int d = total_dim();
  for (const auto& iv : intervals) {
    if (iv.unitary.rows() != d || iv.unitary.cols() != d)
      throw DimensionError("SEModel: interval dimension mismatch");
    if (unitarity_defect(iv.unitary) > 1e-12)
      throw PhysicalityError("SEModel: interval is not unitary");
  }
  DensityMatrix check(initial_se);
  (void)check;
  if (check.dim() != d) throw DimensionError("SEModel: initial state dimension mismatch");
  if (pre_measurement && (pre_measurement->dim_in() != 2 || pre_measurement->dim_out() != 2))
    throw DimensionError("SEModel: pre-measurement channel must act on the qubit");
}

ControlSequence make_sequence(const std::vector<QuantumChannel>& channels, StepSource source) {
  ControlSequence seq;
  seq.reserve(channels.size());
  for (const auto& c : channels) seq.push_back({c, source});
  return seq;
}

CMatrix exchange_hamiltonian(double g, double zeta) {
  const CMatrix xx = kron(pauli(1), pauli(1));
  const CMatrix yy = kron(pauli(2), pauli(2));
  const CMatrix zz = kron(pauli(3), pauli(3));
  return g * (xx + yy) * 0.5 + zeta * zz * 0.5;
}

double khz_to_rad_per_ns(double khz) { return 2.0 * kPi * khz * 1e-6; }

CMatrix evolve(const CMatrix& hamiltonian, double duration_ns) {
  return matrix_exp_hermitian(hamiltonian, duration_ns);
}

CMatrix swap_gate() {
  CMatrix s = CMatrix::Zero(4, 4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

CMatrix initial_state(EnvInit init, int env_dim) {
  CMatrix sys = CMatrix::Zero(2, 2);
  sys(0, 0) = 1.0;
  if (init == EnvInit::Bell) {
    if (env_dim != 2) throw DimensionError("initial_state: Bell init needs a qubit environment");
    CVector phi = CVector::Zero(4);
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    return phi * phi.adjoint();
  }
  CMatrix env = CMatrix::Identity(1, 1);
  for (int d = 1; d < env_dim; d *= 2) env = kron(env, env_qubit_state(init));
  return kron(sys, env);
}

SEModel coupled_neighbor_model(const CouplingConfig& cfg) {
  if (cfg.interval_ns.empty()) throw ConfigError("coupled_neighbor_model: no intervals");
  const CMatrix h = exchange_hamiltonian(khz_to_rad_per_ns(cfg.exchange_khz),
                                         khz_to_rad_per_ns(cfg.zz_khz));
  SEModel m;
  m.env_dim = 2;
  m.probeable = true;
  for (double t : cfg.interval_ns) {
    if (!(t > 0.0)) throw ConfigError("coupled_neighbor_model: durations must be positive");
    m.intervals.push_back({evolve(h, t), t});
  }
  m.initial_se = initial_state(cfg.env_init, 2);
  m.validate();
  return m;
}

SEModel markovian_reset_model(const CouplingConfig& cfg) {
  const int steps = static_cast<int>(cfg.interval_ns.size());
  if (steps < 1 || steps > 3)
    throw ConfigError("markovian_reset_model: between 1 and 3 intervals supported");
  if (cfg.env_init == EnvInit::Bell)
    throw ConfigError("markovian_reset_model: Bell initialization not supported");
  const CMatrix h = exchange_hamiltonian(khz_to_rad_per_ns(cfg.exchange_khz),
                                         khz_to_rad_per_ns(cfg.zz_khz));
  SEModel m;
  m.env_dim = 8;
  for (int j = 0; j < steps; ++j) {
    const double t = cfg.interval_ns[static_cast<std::size_t>(j)];
    if (!(t > 0.0)) throw ConfigError("markovian_reset_model: durations must be positive");
    m.intervals.push_back({embed_two_qubit(evolve(h, t), j, 3), t});
  }
  m.initial_se = initial_state(cfg.env_init, 8);
  m.validate();
  return m;
}

SEModel swap_memory_model() {
  SEModel m;
  m.env_dim = 2;
  m.probeable = true;
  m.intervals = {{swap_gate(), 0.0}, {CMatrix::Identity(4, 4), 0.0}, {swap_gate(), 0.0}};
  m.initial_se = initial_state(EnvInit::Zero, 2);
  m.validate();
  return m;
}

SEModel noiseless_model(int steps) {
  SEModel m;
  m.env_dim = 1;
  for (int j = 0; j < steps; ++j) m.intervals.push_back({CMatrix::Identity(2, 2), 0.0});
  m.initial_se = initial_state(EnvInit::Zero, 1);
  m.validate();
  return m;
}

CMatrix run_joint(const SEModel& model, const ControlSequence& seq) {
  if (seq.size() != model.intervals.size())
    throw DimensionError("run_sequence: " + std::to_string(seq.size()) + " steps for " +
                         std::to_string(model.intervals.size()) + " intervals");
  CMatrix rho = model.initial_se;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const auto& ch = seq[j].channel;
    if (ch.dim_in() != model.sys_dim || ch.dim_out() != model.sys_dim)
      throw DimensionError("run_sequence: control step does not act on the system");
    rho = apply_on_system(ch, rho, model.env_dim);
    const CMatrix& u = model.intervals[j].unitary;
    rho = u * rho * u.adjoint();
  }
  if (model.pre_measurement) rho = apply_on_system(*model.pre_measurement, rho, model.env_dim);
  return rho;
}

CMatrix run_sequence_matrix(const SEModel& model, const ControlSequence& seq) {
  const std::vector<int> dims{model.sys_dim, model.env_dim};
  return partial_trace_keep(run_joint(model, seq), 0, std::span<const int>(dims));
}

DensityMatrix run_sequence(const SEModel& model, const ControlSequence& seq) {
  return DensityMatrix(run_sequence_matrix(model, seq));
}

DensityMatrix two_qubit_probe(const SEModel& model, const ControlSequence& seq) {
  if (!model.probeable || model.env_dim != 2)
    throw ConfigError("two_qubit_probe: environment is not a probe-able neighbour qubit");
  return DensityMatrix(run_joint(model, seq));
}

CountPair sample_counts(const DensityMatrix& state, const PauliBasisSetting& setting,
                        std::int64_t shots, Rng& rng) {
  if (state.dim() != 2) throw DimensionError("sample_counts: qubit state required");
  if (shots <= 0) throw ConfigError("sample_counts: shots must be positive");
  const double p = (setting.projectors[0] * state.matrix()).trace().real();
  const std::int64_t plus = rng.binomial(shots, p);
  return {plus, shots - plus};
}

CountPair sample_counts(const DensityMatrix& state, const PauliBasisSetting& setting,
                        std::int64_t shots, std::uint64_t seed) {
  Rng rng(seed);
  return sample_counts(state, setting, shots, rng);
}

ExperimentRecord record_from_state(const DensityMatrix& state, std::int64_t shots,
                                   std::uint64_t seed, std::string id) {
  ExperimentRecord rec;
  rec.id = std::move(id);
  rec.shots = shots;
  rec.seed = seed;
  Rng rng(seed);
  for (std::size_t a = 0; a < 3; ++a)
    rec.counts[a] = sample_counts(state, pauli_settings()[a], shots, rng);
  return rec;
}

ExperimentRecord simulate_experiment(const SEModel& model, const ControlSequence& seq,
                                     std::int64_t shots, std::uint64_t seed, std::string id) {
  return record_from_state(run_sequence(model, seq), shots, seed, std::move(id));
}

TwoQubitRecord sample_two_qubit(const DensityMatrix& state, std::int64_t shots,
                                std::uint64_t seed, std::string id) {
  if (state.dim() != 4) throw DimensionError("sample_two_qubit: two-qubit state required");
  if (shots <= 0) throw ConfigError("sample_two_qubit: shots must be positive");
  TwoQubitRecord rec;
  rec.id = std::move(id);
  rec.shots = shots;
  rec.seed = seed;
  Rng rng(seed);
  const auto& s = pauli_settings();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::array<double, 4> p{};
      for (int oa = 0; oa < 2; ++oa)
        for (int ob = 0; ob < 2; ++ob)
          p[oa * 2 + ob] =
              (kron(s[a].projectors[oa], s[b].projectors[ob]) * state.matrix()).trace().real();
      const auto draw = rng.multinomial(shots, p);
      for (int o = 0; o < 4; ++o) rec.counts[a * 3 + b][o] = draw[o];
    }
  return rec;
}

}  // namespace nmpt
