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

#include "nmpt/control.hpp"

#include <algorithm>
#include <cmath>

#include "nmpt/metrics.hpp"
#include "nmpt/qpt.hpp"
#include "nmpt/qst.hpp"

namespace nmpt {

namespace {

CMatrix params_unitary(const RVector& x) { return u3_matrix({x(0), x(1), x(2)}); }

CMatrix plus_plus() {
  CVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const CVector pp = kron(plus, plus);
  return pp * pp.adjoint();
}

TrajectoryPoint sample_point(double t, const CMatrix& rho) {
  const DensityMatrix r(hermitian_part(rho));
  TrajectoryPoint p;
  p.time_ns = t;
  p.negativity = negativity(r);
  p.mutual_info_bits = mutual_information_state(r);
  p.purity_q1 = purity(partial_trace(r, 0, {2, 2}));
  p.purity_q2 = purity(partial_trace(r, 1, {2, 2}));
  return p;
}

CMatrix rotation(int axis, double angle) {
  return (std::cos(angle / 2.0) * identity(2) -
          Complex(0.0, std::sin(angle / 2.0)) * pauli(axis))
      .eval();
}

}  // namespace

CMatrix coupling_hamiltonian(double exchange_khz, double zz_khz) {
  return exchange_hamiltonian(khz_to_rad_per_ns(exchange_khz), khz_to_rad_per_ns(zz_khz));
}

SEModel decoupling_probe_model(const DecouplingLayout& layout) {
  if (layout.pre_idle_ns < 0.0 || !(layout.post_idle_ns > 0.0))
    throw ConfigError("decoupling: idle durations must be non-negative (post-gate positive)");
  const CMatrix h = coupling_hamiltonian(layout.exchange_khz, layout.zz_khz);
  const CMatrix pre = evolve(h, layout.pre_idle_ns);
  SEModel m;
  m.env_dim = 2;
  m.probeable = true;
  m.initial_se = pre * plus_plus() * pre.adjoint();
  m.intervals.push_back({evolve(h, layout.post_idle_ns), layout.post_idle_ns});
  m.validate();
  return m;
}

DecouplingData simulate_decoupling_data(const SEModel& probe, const std::vector<CMatrix>& basis,
                                        std::int64_t shots, std::uint64_t seed) {
  if (probe.intervals.size() != 1) throw ConfigError("decoupling: probe model must have one step");
  if (shots < 0) throw ConfigError("decoupling: negative shots");
  DecouplingData d;
  d.basis = basis;
  d.shots = shots;
  d.seed = seed;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ControlSequence seq{{QuantumChannel::from_unitary(basis[j]), StepSource::Basis}};
    const DensityMatrix rho = two_qubit_probe(probe, seq);
    if (shots > 0) {
      d.records.push_back(sample_two_qubit(rho, shots, stream_seed(seed, j), "g" + std::to_string(j)));
      d.states.push_back(qst_mle(d.records.back()).matrix());
    } else {
      d.states.push_back(rho.matrix());
    }
  }
  return d;
}

ProcessTensor decoupling_tensor(const DecouplingData& data) {
  ProcessTensor pt = assemble({make_operation_slot(data.basis)}, data.states, 4);
  pt.shots = data.shots;
  pt.label = "decoupling";
  return pt;
}

double decoupling_objective(const ProcessTensor& pt, const CMatrix& u) {
  if (pt.steps() != 1 || pt.out_dim() != 4)
    throw ConfigError("decoupling: expected a one-step tensor with two-qubit outputs");
  const DensityMatrix rho = project_to_physical(contract(pt, {unitary_choi_state(u)}));
  return 2.0 - purity(partial_trace(rho, 0, {2, 2})) - purity(partial_trace(rho, 1, {2, 2}));
}

double involution_defect(const CMatrix& u) {
  const Complex det = u.determinant();
  return std::abs(u.trace() / std::sqrt(det)) / 2.0;
}

DecouplingResult optimize_decoupling(const ProcessTensor& pt, std::uint64_t seed,
                                     const DecouplingOptions& opts) {
  auto f = [&](const RVector& x) { return decoupling_objective(pt, params_unitary(x)); };
  const auto ms = multistart(f, 3, opts.restarts, seed, 0.0, 2.0 * kPi, opts.nm);
  if (!std::isfinite(ms.best.value)) throw NumericalError("optimize_decoupling: all restarts failed");

  // Gather runs in the optimal window; prefer the one closest to an involution.
  const OptimResult* pick = nullptr;
  std::vector<CMatrix> optimal;
  double best_defect = 0.0;
  for (const auto& r : ms.runs) {
    if (r.value > ms.best.value + opts.degeneracy_tolerance) continue;
    const CMatrix u = params_unitary(r.x);
    optimal.push_back(u);
    const double defect = involution_defect(u);
    if (!pick || defect < best_defect - 1e-12) {
      pick = &r;
      best_defect = defect;
    }
  }
  DecouplingResult out;
  out.gate = {pick->x(0), pick->x(1), pick->x(2)};
  out.unitary = params_unitary(pick->x);
  out.objective = pick->value;
  out.rotation = rotation_axis_angle(out.unitary);
  out.involution_defect = best_defect;
  out.optimal_runs = static_cast<int>(optimal.size());
  const QuantumChannel ref = QuantumChannel::from_unitary(optimal.front());
  for (const auto& u : optimal)
    if (process_fidelity(ref, QuantumChannel::from_unitary(u)) < 1.0 - 1e-4) out.degenerate = true;
  out.restarts = static_cast<int>(ms.runs.size());
  out.evaluations = ms.total_evaluations;
  return out;
}

std::vector<TrajectoryPoint> decoupling_trajectory(const DecouplingLayout& layout,
                                                   const std::vector<CMatrix>& cycle,
                                                   const TrajectoryOptions& opts) {
  if (!(opts.sample_ns > 0.0) || !(opts.period_ns > 0.0) || opts.horizon_ns < 0.0)
    throw ConfigError("trajectory: sample interval, period and horizon must be positive");
  const CMatrix h = coupling_hamiltonian(layout.exchange_khz, layout.zz_khz);
  // Event times: samples and gates, merged in order.
  std::vector<std::pair<double, int>> events;  // (time, -1 sample | k gate index)
  const auto samples = static_cast<int>(std::floor(opts.horizon_ns / opts.sample_ns + 1e-9));
  for (int s = 0; s <= samples; ++s) events.push_back({s * opts.sample_ns, -1});
  if (!cycle.empty()) {
    int k = 0;
    for (double t = opts.first_gate_ns; t <= opts.horizon_ns + 1e-9; t += opts.period_ns, ++k)
      events.push_back({t, k});
  }
  std::stable_sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.first - b.first) > 1e-9) return a.first < b.first;
    return a.second < b.second;  // sample before gate
  });
  CMatrix rho = plus_plus();
  double now = 0.0;
  std::vector<TrajectoryPoint> out;
  for (const auto& [t, what] : events) {
    if (t > now) {
      const CMatrix w = evolve(h, t - now);
      rho = w * rho * w.adjoint();
      now = t;
    }
    if (what < 0) {
      out.push_back(sample_point(t, rho));
    } else {
      const CMatrix g = kron(cycle[static_cast<std::size_t>(what) % cycle.size()], identity(2));
      rho = g * rho * g.adjoint();
    }
  }
  return out;
}

DecouplingComparison apply_periodic_decoupling(const DecouplingLayout& layout, const CMatrix& gate,
                                               const TrajectoryOptions& opts) {
  const CMatrix x = rotation(1, kPi), y = rotation(2, kPi);
  DecouplingComparison c;
  c.idle = decoupling_trajectory(layout, {}, opts);
  c.decoupled = decoupling_trajectory(layout, {gate}, opts);
  c.xy4 = decoupling_trajectory(layout, {x, y, x, y}, opts);
  return c;
}

double min_purity(const std::vector<TrajectoryPoint>& t) {
  double m = 1.0;
  for (const auto& p : t) m = std::min({m, p.purity_q1, p.purity_q2});
  return m;
}

double peak_negativity(const std::vector<TrajectoryPoint>& t) {
  double m = 0.0;
  for (const auto& p : t) m = std::max(m, p.negativity);
  return m;
}

QuantumChannel NonUnitaryTarget::channel() const {
  if (!(eta >= 0.0 && eta <= 1.0)) throw ConfigError("NonUnitaryTarget: eta outside [0, 1]");
  const CMatrix e = rotation(1, alpha) * rotation(2, alpha) * rotation(3, alpha);
  return QuantumChannel::from_kraus(
      {(std::sqrt(eta) * e).eval(), (std::sqrt(1.0 - eta) * pauli(2) * e).eval()});
}

SEModel synthesis_model(const SynthesisLayout& layout) {
  CouplingConfig cfg;
  cfg.exchange_khz = layout.exchange_khz;
  cfg.zz_khz = layout.zz_khz;
  cfg.interval_ns = {layout.idle_ns, layout.idle_ns};
  cfg.env_init = layout.env_init;
  return coupled_neighbor_model(cfg);
}

ProcessTensor synthesis_tensor(const SEModel& model, const std::vector<CMatrix>& basis,
                               std::int64_t shots, std::uint64_t seed) {
  if (model.intervals.size() != 2) throw ConfigError("synthesis: model must have two steps");
  if (shots < 0) throw ConfigError("synthesis: negative shots");
  const auto& preps = preparation_unitaries();
  std::vector<CMatrix> states;
  std::size_t flat = 0;
  for (const auto& p : preps)
    for (const auto& u : basis) {
      const ControlSequence seq{{QuantumChannel::from_unitary(p), StepSource::Preparation},
                                {QuantumChannel::from_unitary(u), StepSource::Basis}};
      const DensityMatrix rho = run_sequence(model, seq);
      states.push_back(shots > 0 ? qst_mle(record_from_state(rho, shots, stream_seed(seed, flat)))
                                       .matrix()
                                 : rho.matrix());
      ++flat;
    }
  ProcessTensor pt =
      assemble({make_preparation_slot(preps), make_operation_slot(basis)}, std::move(states), 2);
  pt.shots = shots;
  pt.label = "synthesis";
  return pt;
}

double synthesis_loss(const ProcessTensor& pt, const QuantumChannel& target, const CMatrix& u) {
  if (pt.steps() != 2 || pt.out_dim() != 2)
    throw ConfigError("synthesis: expected a preparation slot and one gate slot");
  const CMatrix gate = unitary_choi_state(u);
  const CMatrix zero = DensityMatrix::basis_state(2, 0).matrix();
  double loss = 0.0;
  for (const auto& p : preparation_unitaries()) {
    const CMatrix tau = contract(pt, {unitary_choi_state(p), gate});
    const CMatrix rho = target.apply((p * zero * p.adjoint()).eval());
    loss += trace_distance(hermitian_part(tau), rho);
  }
  return loss;
}

SynthesisResult synthesize_gate(const ProcessTensor& pt, const SEModel& model,
                                const NonUnitaryTarget& target, std::uint64_t seed,
                                const SynthesisOptions& opts) {
  const QuantumChannel n = target.channel();
  auto f = [&](const RVector& x) { return synthesis_loss(pt, n, params_unitary(x)); };
  const auto ms = multistart(f, 3, opts.restarts, seed, 0.0, 2.0 * kPi, opts.nm);
  if (!std::isfinite(ms.best.value)) throw NumericalError("synthesize_gate: all restarts failed");
  SynthesisResult r;
  r.gate = {ms.best.x(0), ms.best.x(1), ms.best.x(2)};
  r.loss = ms.best.value;
  const ControlSequence layout{{QuantumChannel::identity(2), StepSource::Free},
                               {make_unitary(r.gate), StepSource::Free}};
  r.realized = qpt(model, layout, opts.qpt_shots, stream_seed(seed, 77));
  r.process_fidelity = process_fidelity(r.realized, n);
  r.target_unitarity = unitarity(n);
  r.realized_unitarity = unitarity(r.realized);
  r.evaluations = ms.total_evaluations;
  return r;
}

std::vector<SweepPoint> synthesis_sweep(const ProcessTensor& pt, const SEModel& model,
                                        double alpha, int points, std::uint64_t seed,
                                        const SynthesisOptions& opts) {
  if (points < 2) throw ConfigError("synthesis_sweep: at least two grid points");
  std::vector<SweepPoint> out;
  for (int i = 0; i < points; ++i) {
    const double eta = 0.5 * i / (points - 1);
    out.push_back({eta, synthesize_gate(pt, model, {alpha, eta}, stream_seed(seed, i), opts)});
  }
  return out;
}

SweepSummary summarize_sweep(const std::vector<SweepPoint>& sweep, double tolerance) {
  SweepSummary s;
  if (sweep.empty()) return s;
  double achievable = 1.0;
  for (const auto& p : sweep) {
    s.peak_fidelity = std::max(s.peak_fidelity, p.result.process_fidelity);
    achievable = std::min(achievable, p.result.realized_unitarity);
  }
  s.achievable_unitarity = achievable;
  std::vector<const SweepPoint*> below;
  for (const auto& p : sweep)
    if (p.result.target_unitarity <= achievable) below.push_back(&p);
  std::sort(below.begin(), below.end(), [](const SweepPoint* a, const SweepPoint* b) {
    return a->result.target_unitarity > b->result.target_unitarity;
  });
  for (std::size_t i = 1; i < below.size(); ++i) {
    const double rise = below[i]->result.process_fidelity - below[i - 1]->result.process_fidelity;
    s.worst_rise = std::max(s.worst_rise, rise);
    if (rise > tolerance) s.monotone_below_peak = false;
  }
  return s;
}

}  // namespace nmpt
