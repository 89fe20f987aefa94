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

#include <numeric>

#include "nmpt/metrics.hpp"
#include "nmpt/qst.hpp"

namespace nmpt {

std::string sequence_id(const SequenceKey& key) {
  return "p" + std::to_string(key.prep) + "-u" + std::to_string(key.first) + "-u" +
         std::to_string(key.second);
}

std::size_t Dataset::index(int prep, int first, int second) const {
  const std::size_t n = pool.size();
  return (static_cast<std::size_t>(prep) * n + static_cast<std::size_t>(first)) * n +
         static_cast<std::size_t>(second);
}

SequenceKey Dataset::key(std::size_t flat) const {
  const std::size_t n = pool.size();
  return {static_cast<int>(flat / (n * n)), static_cast<int>((flat / n) % n),
          static_cast<int>(flat % n)};
}

Dataset simulate_dataset(const SEModel& model, const std::vector<CMatrix>& preparations,
                         const std::vector<CMatrix>& pool, std::int64_t shots,
                         std::uint64_t seed, int basis_preparations) {
  if (model.intervals.size() != 3)
    throw ConfigError("simulate_dataset: model must have three intervals");
  if (shots < 0) throw ConfigError("simulate_dataset: negative shots");
  if (basis_preparations > static_cast<int>(preparations.size()))
    throw ConfigError("simulate_dataset: fewer preparations than the basis needs");
  Dataset d;
  d.preparations = preparations;
  d.basis_preparations = basis_preparations;
  d.pool = pool;
  d.shots = shots;
  d.seed = seed;
  std::vector<QuantumChannel> prep_ch, pool_ch;
  for (const auto& u : preparations) prep_ch.push_back(QuantumChannel::from_unitary(u));
  for (const auto& u : pool) pool_ch.push_back(QuantumChannel::from_unitary(u));
  d.states.resize(d.size());
  if (shots > 0) d.records.resize(d.size());
  for (std::size_t flat = 0; flat < d.size(); ++flat) {
    const SequenceKey k = d.key(flat);
    const ControlSequence seq{{prep_ch[static_cast<std::size_t>(k.prep)], StepSource::Preparation},
                              {pool_ch[static_cast<std::size_t>(k.first)], StepSource::Basis},
                              {pool_ch[static_cast<std::size_t>(k.second)], StepSource::Basis}};
    const DensityMatrix rho = run_sequence(model, seq);
    if (shots > 0) {
      d.records[flat] = record_from_state(rho, shots, stream_seed(seed, flat), sequence_id(k));
      d.states[flat] = qst_mle(d.records[flat]).matrix();
    } else {
      d.states[flat] = rho.matrix();
    }
  }
  return d;
}

void rebuild_states(Dataset& data) {
  if (data.records.size() != data.size())
    throw ConfigError("rebuild_states: dataset has no records");
  data.states.resize(data.size());
  for (std::size_t i = 0; i < data.records.size(); ++i)
    data.states[i] = qst_mle(data.records[i]).matrix();
}

Dataset resample_dataset(const Dataset& data, std::uint64_t seed, std::uint64_t index) {
  if (data.records.size() != data.size())
    throw ConfigError("resample_dataset: exact datasets carry no counts to resample");
  Dataset out = data;
  Rng rng = Rng::stream(seed, index);
  for (auto& r : out.records) r = resample(r, rng);
  rebuild_states(out);
  return out;
}

ProcessTensor build_tensor(const Dataset& data, const std::vector<int>& order, int n) {
  if (n < 1 || n > static_cast<int>(order.size()))
    throw ConfigError("build_tensor: basis size out of range");
  std::vector<CMatrix> basis_u;
  for (int i = 0; i < n; ++i) basis_u.push_back(data.pool[static_cast<std::size_t>(order[i])]);
  const std::vector<CMatrix> preps(data.preparations.begin(),
                                   data.preparations.begin() + data.basis_preparations);
  std::vector<SlotBasis> slots{make_preparation_slot(preps), make_operation_slot(basis_u),
                               make_operation_slot(basis_u)};
  std::vector<CMatrix> states;
  states.reserve(preps.size() * static_cast<std::size_t>(n * n));
  for (int p = 0; p < data.basis_preparations; ++p)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) states.push_back(data.states[data.index(p, order[j], order[k])]);
  ProcessTensor pt = assemble(std::move(slots), std::move(states), 2);
  pt.shots = data.shots;
  return pt;
}

double reconstruction_fidelity(const CMatrix& predicted, const CMatrix& measured) {
  return fidelity(project_to_physical(predicted), project_to_physical(measured));
}

std::vector<SequenceKey> held_out_keys(const Dataset& data, const std::vector<int>& order,
                                       int n, const std::vector<int>& preps) {
  std::vector<int> ps = preps;
  if (ps.empty())
    for (int p = 0; p < data.basis_preparations; ++p) ps.push_back(p);
  std::vector<SequenceKey> keys;
  for (int p : ps)
    for (std::size_t j = static_cast<std::size_t>(n); j < order.size(); ++j)
      for (std::size_t k = static_cast<std::size_t>(n); k < order.size(); ++k)
        keys.push_back({p, order[j], order[k]});
  return keys;
}

SplitResult evaluate_tensor(const ProcessTensor& pt, const Dataset& data,
                            const std::vector<SequenceKey>& keys, int n) {
  if (keys.empty()) throw ConfigError("evaluate: no verification sequences");
  SplitResult r;
  r.n = n;
  r.held_out = keys;
  std::vector<double> infid;
  for (const auto& k : keys) {
    const std::vector<CMatrix> ctl{
        unitary_choi_state(data.preparations[static_cast<std::size_t>(k.prep)]),
        unitary_choi_state(data.pool[static_cast<std::size_t>(k.first)]),
        unitary_choi_state(data.pool[static_cast<std::size_t>(k.second)])};
    const double f = reconstruction_fidelity(contract(pt, ctl),
                                             data.states[data.index(k.prep, k.first, k.second)]);
    r.fidelities.push_back(f);
    infid.push_back(1.0 - f);
  }
  r.infidelity = box_stats(infid);
  r.mean_infidelity = r.infidelity.mean;
  return r;
}

SplitResult evaluate_split(const Dataset& data, const std::vector<int>& order, int n,
                           const std::vector<int>& preps) {
  if (n >= static_cast<int>(order.size()))
    throw ConfigError("evaluate_split: n = " + std::to_string(n) +
                      " leaves no verification set");
  const ProcessTensor pt = build_tensor(data, order, n);
  return evaluate_tensor(pt, data, held_out_keys(data, order, n, preps), n);
}

std::vector<int> identity_order(std::size_t n) {
  std::vector<int> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

double mean_infidelity_stat(const SplitResult& r) { return r.mean_infidelity; }

double median_fidelity_stat(const SplitResult& r) { return 1.0 - r.infidelity.median; }

ConfidenceInterval bootstrap_ci(const Dataset& data, const std::vector<int>& order, int n,
                      int resamples, std::uint64_t seed, const std::vector<int>& preps,
                      const SplitStatistic& stat) {
  if (resamples < 2) throw ConfigError("bootstrap_ci: at least two resamples required");
  const double point = stat(evaluate_split(data, order, n, preps));
  std::vector<double> reps;
  reps.reserve(static_cast<std::size_t>(resamples));
  for (int r = 0; r < resamples; ++r) {
    const Dataset d = resample_dataset(data, seed, static_cast<std::uint64_t>(r));
    reps.push_back(stat(evaluate_split(d, order, n, preps)));
  }
  return bootstrap_interval(point, reps, BootstrapMethod::BiasShifted);
}

}  // namespace nmpt
