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
#include "nmpt/qst.hpp"

namespace nmpt {

StepModelFactory step_model_factory(const CouplingConfig& cfg) {
  return [cfg](double duration_ns) {
    SEModel m;
    m.env_dim = 2;
    m.probeable = true;
    const CMatrix h = exchange_hamiltonian(khz_to_rad_per_ns(cfg.exchange_khz),
                                           khz_to_rad_per_ns(cfg.zz_khz));
    m.intervals = {{evolve(h, duration_ns), duration_ns}};
    m.initial_se = initial_state(cfg.env_init, 2);
    m.validate();
    return m;
  };
}

namespace {

// Sequential stream indices keep every tomography run independent.
enum : std::uint64_t { kPrepStream = 0, kPoolStream = 1000, kIdleStream = 5000, kInitStream = 9000 };

QuantumChannel characterize_one(const SEModel& model, const CMatrix& gate, std::int64_t shots,
                                std::uint64_t seed, QptData* data) {
  const ControlSequence layout{{QuantumChannel::from_unitary(gate), StepSource::Free}};
  if (shots == 0) return exact_channel(model, layout);
  *data = qpt_data(model, layout, shots, seed);
  return channel_from_qpt(*data);
}

}  // namespace

MarkovModel characterize_gates(const StepModelFactory& step_model,
                               const std::vector<CMatrix>& preparations,
                               const std::vector<CMatrix>& pool, const StepTiming& timing,
                               std::int64_t shots, std::uint64_t seed) {
  if (shots < 0) throw ConfigError("characterize_gates: negative shots");
  if (timing.gate_ns < 0.0 || timing.idle_ns < 0.0)
    throw ConfigError("characterize_gates: negative durations");
  MarkovModel mm;
  mm.timing = timing;
  mm.shots = shots;
  const SEModel gate_model = step_model(timing.gate_ns);
  const bool keep = shots > 0;
  mm.preparation_data.resize(keep ? preparations.size() : 0);
  mm.pool_data.resize(keep ? pool.size() : 0);
  for (std::size_t i = 0; i < preparations.size(); ++i)
    mm.preparations.push_back(characterize_one(gate_model, preparations[i], shots,
                                               stream_seed(seed, kPrepStream + i),
                                               keep ? &mm.preparation_data[i] : nullptr));
  for (std::size_t i = 0; i < pool.size(); ++i)
    mm.pool.push_back(characterize_one(gate_model, pool[i], shots,
                                       stream_seed(seed, kPoolStream + i),
                                       keep ? &mm.pool_data[i] : nullptr));
  const SEModel idle_model = step_model(timing.idle_ns);
  QptData idle_data;
  mm.idles.emplace(timing.idle_ns,
                   characterize_one(idle_model, pauli(0), shots, stream_seed(seed, kIdleStream),
                                    keep ? &idle_data : nullptr));
  if (keep) mm.idle_data.emplace(timing.idle_ns, idle_data);

  // Initial-state estimate from QST of the untouched system.
  const std::vector<int> dims{gate_model.sys_dim, gate_model.env_dim};
  const DensityMatrix rho0(partial_trace_keep(gate_model.initial_se, 0, std::span<const int>(dims)));
  if (keep) {
    mm.initial_record = record_from_state(rho0, shots, stream_seed(seed, kInitStream), "initial");
    mm.initial = qst_mle(*mm.initial_record);
  } else {
    mm.initial = rho0;
  }
  return mm;
}

MarkovModel resample_markov(const MarkovModel& mm, std::uint64_t seed, std::uint64_t index) {
  if (mm.shots == 0) throw ConfigError("resample_markov: exact model has no counts");
  MarkovModel out = mm;
  Rng rng = Rng::stream(seed, index);
  auto redo = [&](QptData& d) {
    for (auto& r : d.records) r = resample(r, rng);
    return channel_from_qpt(d);
  };
  for (std::size_t i = 0; i < out.preparation_data.size(); ++i)
    out.preparations[i] = redo(out.preparation_data[i]);
  for (std::size_t i = 0; i < out.pool_data.size(); ++i) out.pool[i] = redo(out.pool_data[i]);
  for (auto& [t, d] : out.idle_data) out.idles.at(t) = redo(d);
  if (out.initial_record) {
    out.initial_record = resample(*out.initial_record, rng);
    out.initial = qst_mle(*out.initial_record);
  }
  return out;
}

DensityMatrix predict_markov(const MarkovModel& mm, const std::vector<GateRef>& gates) {
  const auto idle = mm.idles.find(mm.timing.idle_ns);
  if (idle == mm.idles.end()) throw ConfigError("predict_markov: idle duration not characterized");
  CMatrix rho = mm.initial.matrix();
  for (const auto& g : gates) {
    const auto& set = g.kind == GateKind::Preparation ? mm.preparations : mm.pool;
    if (g.index < 0 || g.index >= static_cast<int>(set.size()))
      throw ConfigError("predict_markov: gate " + std::to_string(g.index) + " not characterized");
    rho = idle->second.apply(set[static_cast<std::size_t>(g.index)].apply(rho));
  }
  return DensityMatrix(hermitian_part(rho));
}

std::vector<double> markov_fidelities(const MarkovModel& mm, const Dataset& data,
                                      const std::vector<SequenceKey>& keys) {
  std::vector<double> out;
  out.reserve(keys.size());
  for (const auto& k : keys) {
    const DensityMatrix pred = predict_markov(
        mm, {{GateKind::Preparation, k.prep}, {GateKind::Pool, k.first}, {GateKind::Pool, k.second}});
    out.push_back(fidelity(pred, DensityMatrix(data.states[data.index(k.prep, k.first, k.second)])));
  }
  return out;
}

Comparison compare(const std::vector<double>& tensor_fidelities,
                   const std::vector<double>& markov_fidelities) {
  if (tensor_fidelities.size() != markov_fidelities.size() || tensor_fidelities.empty())
    throw ConfigError("compare: fidelity sets differ in size");
  Comparison c;
  c.tensor = box_stats(tensor_fidelities);
  c.markov = box_stats(markov_fidelities);
  for (std::size_t i = 0; i < tensor_fidelities.size(); ++i)
    c.deltas.push_back(tensor_fidelities[i] - markov_fidelities[i]);
  c.delta = box_stats(c.deltas);
  return c;
}

ConfidenceInterval markov_bootstrap_ci(const MarkovModel& mm, const Dataset& data,
                                       const std::vector<SequenceKey>& keys, int resamples,
                                       std::uint64_t seed) {
  if (resamples < 2) throw ConfigError("markov_bootstrap_ci: at least two resamples required");
  const double point = median(markov_fidelities(mm, data, keys));
  std::vector<double> reps;
  for (int r = 0; r < resamples; ++r) {
    const auto idx = static_cast<std::uint64_t>(r);
    const Dataset d = resample_dataset(data, seed, idx);
    reps.push_back(median(markov_fidelities(resample_markov(mm, stream_seed(seed, 7), idx), d, keys)));
  }
  return bootstrap_interval(point, reps, BootstrapMethod::BiasShifted);
}

}  // namespace nmpt
