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

#include "nmpt/harness/pipeline.hpp"

#include <algorithm>
#include <set>

#include "nmpt/memory.hpp"
#include "nmpt/metrics.hpp"

namespace nmpt::harness {

using nlohmann::json;

namespace {

const char* kAxes[3] = {"X", "Y", "Z"};

json ci_json(const std::optional<ConfidenceInterval>& ci) {
  if (!ci) return nullptr;
  return {{"point", ci->point}, {"lower", ci->lower}, {"upper", ci->upper}};
}

json box_json(const BoxStats& b) {
  return {{"count", b.count},   {"mean", b.mean},
          {"median", b.median}, {"q1", b.q1},
          {"q3", b.q3},         {"whisker_low", b.whisker_low},
          {"whisker_high", b.whisker_high}, {"min", b.min},
          {"max", b.max}};
}

json params_json(const UnitaryParams& p) {
  return {{"theta", p.theta}, {"phi", p.phi}, {"lambda", p.lambda}};
}

json tensor_sidecar(const ProcessTensor& pt, int basis_size) {
  return {{"label", pt.label},
          {"steps", pt.steps()},
          {"out_dim", pt.out_dim()},
          {"basis_size", basis_size},
          {"shots", pt.shots},
          {"matrix", matrix_to_json(pt.matrix())}};
}

json trajectory_json(const std::vector<TrajectoryPoint>& t) {
  json a = json::array();
  for (const auto& p : t)
    a.push_back({{"time_ns", p.time_ns},
                 {"negativity", p.negativity},
                 {"mutual_info_bits", p.mutual_info_bits},
                 {"purity_q1", p.purity_q1},
                 {"purity_q2", p.purity_q2}});
  return a;
}

bool bootstrappable(const ExperimentPlan& plan) {
  return plan.shots > 0 && plan.bootstrap_resamples >= 2;
}

std::pair<double, double> coupling_of(const ExperimentPlan& plan, const char* stage) {
  switch (plan.model.kind) {
    case ModelKind::CoupledNeighbor:
    case ModelKind::MarkovianReset:
      return {plan.model.exchange_freq_khz, plan.model.zz_freq_khz};
    case ModelKind::Noiseless:
      return {0.0, 0.0};
    default:
      throw ConfigError(std::string("plan field 'model.kind': the ") + stage +
                        " stage needs an exchange-coupled or noiseless model");
  }
}

// ---- stages -----------------------------------------------------------------

void characterize(const ExperimentPlan& plan, ResultsStore& store) {
  const Stage st = Stage::Characterize;
  const auto pool = plan_pool(plan);
  const auto preps = plan_preparations(plan);
  const auto order = plan_order(plan, pool);

  std::set<std::string> have;
  for (const auto& r : store.records(plan.name, "circuit"))
    have.insert(r.at("id").get<std::string>() + "/" + r.at("axis").get<std::string>());

  const Dataset data = simulate_dataset(build_model(plan), preps, pool, plan.shots, plan.seed);
  std::vector<json> batch;
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    const SequenceKey k = data.key(flat);
    const std::string id = sequence_id(k);
    for (int a = 0; a < 3; ++a) {
      if (have.count(id + "/" + kAxes[a])) continue;
      json r = make_record(plan, st, "circuit");
      r["id"] = id;
      r["prep"] = k.prep;
      r["first"] = k.first;
      r["second"] = k.second;
      r["basis_preparation"] = k.prep < data.basis_preparations;
      r["axis"] = kAxes[a];
      r["shots"] = plan.shots;
      if (plan.shots > 0) {
        const auto& rec = data.records[flat];
        r["circuit_seed"] = rec.seed;
        r["counts"] = {rec.counts[static_cast<std::size_t>(a)][0],
                       rec.counts[static_cast<std::size_t>(a)][1]};
      } else {
        r["expectation"] = (data.states[flat] * pauli(a + 1)).trace().real();
      }
      batch.push_back(std::move(r));
      if (batch.size() >= 1024) {
        store.append_all(batch);
        batch.clear();
      }
    }
  }
  store.append_all(batch);

  json states = json::array();
  for (const auto& s : data.states) states.push_back(matrix_to_json(s));
  json tomo = make_record(plan, st, "tomography");
  tomo["states"] = store.write_sidecar({{"states", states}});
  tomo["count"] = data.size();

  json basis = make_record(plan, st, "basis");
  basis["pool_seed"] = plan.pool_seed;
  basis["pool_size"] = plan.pool_size;
  basis["order"] = order;
  basis["overlaps"] = mean_overlaps(pool);
  basis["overlap_ordering"] = plan.overlap_ordering;

  const ProcessTensor pt = build_tensor(data, order, plan.basis_size);
  json tensor = make_record(plan, st, "tensor");
  tensor["label"] = "characterize";
  tensor["basis_size"] = plan.basis_size;
  tensor["sidecar"] = store.write_sidecar(tensor_sidecar(pt, plan.basis_size));
  std::vector<json> summary;
  for (auto* r : {&tomo, &basis, &tensor})
    if (store.records(plan.name, r->at("kind")).empty()) summary.push_back(*r);
  store.append_all(summary);
}

void evaluate(const ExperimentPlan& plan, ResultsStore& store) {
  const Stage st = Stage::Evaluate;
  const Dataset data = load_dataset(plan, store);
  const auto order = plan_order(plan, data.pool);
  std::vector<json> out;
  for (std::size_t i = 0; i < plan.evaluate_sizes.size(); ++i) {
    const int n = plan.evaluate_sizes[i];
    const SplitResult r = evaluate_split(data, order, n);
    std::optional<ConfidenceInterval> ci;
    if (bootstrappable(plan))
      ci = bootstrap_ci(data, order, n, plan.bootstrap_resamples, stream_seed(plan.seed, 100 + i));
    json rec = make_record(plan, st, "infidelity_vs_basis");
    rec["n"] = n;
    rec["held_out"] = r.held_out.size();
    rec["mean_infidelity"] = r.mean_infidelity;
    rec["ci"] = ci_json(ci);
    out.push_back(rec);
  }

  const SplitResult r = evaluate_split(data, order, plan.basis_size);
  json table = make_record(plan, st, "fidelity_table");
  table["n"] = plan.basis_size;
  json ids = json::array();
  for (const auto& k : r.held_out) ids.push_back(sequence_id(k));
  table["ids"] = ids;
  table["fidelities"] = r.fidelities;
  table["infidelity_box"] = box_json(r.infidelity);
  std::optional<ConfidenceInterval> med;
  if (bootstrappable(plan))
    med = bootstrap_ci(data, order, plan.basis_size, plan.bootstrap_resamples,
                       stream_seed(plan.seed, 200), {}, median_fidelity_stat);
  table["median_fidelity_ci"] = ci_json(med);
  out.push_back(table);

  if (data.preparations.size() > static_cast<std::size_t>(data.basis_preparations)) {
    std::vector<int> in, oob;
    for (int p = 0; p < static_cast<int>(data.preparations.size()); ++p)
      (p < data.basis_preparations ? in : oob).push_back(p);
    const SplitResult ro = evaluate_split(data, order, plan.basis_size, oob);
    json check = make_record(plan, st, "out_of_basis_check");
    check["n"] = plan.basis_size;
    check["in_basis_median_fidelity"] = 1.0 - r.infidelity.median;
    check["out_of_basis_median_fidelity"] = 1.0 - ro.infidelity.median;
    check["out_of_basis_box"] = box_json(ro.infidelity);
    if (bootstrappable(plan)) {
      const auto ci_in = bootstrap_ci(data, order, plan.basis_size, plan.bootstrap_resamples,
                                      stream_seed(plan.seed, 300), in, median_fidelity_stat);
      const auto ci_out = bootstrap_ci(data, order, plan.basis_size, plan.bootstrap_resamples,
                                       stream_seed(plan.seed, 300), oob, median_fidelity_stat);
      check["in_basis_ci"] = ci_json(ci_in);
      check["out_of_basis_ci"] = ci_json(ci_out);
      check["overlap"] = ci_in.overlaps(ci_out);
    }
    out.push_back(check);
  }
  store.append_all(out);
}

void memory(const ExperimentPlan& plan, ResultsStore& store) {
  const Dataset data = load_dataset(plan, store);
  const auto order = plan_order(plan, data.pool);
  MemoryOptions opts;
  opts.restarts = plan.memory.restarts;
  opts.resamples = plan.shots > 0 ? plan.memory.resamples : 0;
  std::vector<json> out;
  int i = 0;
  for (const auto& placement : barrier_placements()) {
    const MemoryBound b =
        memory_bound(data, order, plan.basis_size, placement, stream_seed(plan.seed, 400 + i++), opts);
    json r = make_record(plan, Stage::Memory, "memory_bound");
    r["barrier_slots"] = placement;
    r["cmi_bits"] = b.cmi_bits;
    r["ci"] = ci_json(b.ci);
    r["significant"] = b.significant();
    r["encoder"] = {params_json(b.argmax.encoder[0]), params_json(b.argmax.encoder[1])};
    r["decoder"] = params_json(b.argmax.decoder);
    if (placement.size() == 1) r["v"] = params_json(b.argmax.v);
    r["restarts"] = b.restarts;
    r["evaluations"] = b.evaluations;
    out.push_back(r);
  }
  store.append_all(out);
}

void markov(const ExperimentPlan& plan, ResultsStore& store) {
  const Dataset data = load_dataset(plan, store);
  const auto order = plan_order(plan, data.pool);
  const StepTiming timing{plan.model.gate_duration_ns,
                          plan.model.idle_scale * plan.model.idle_duration_ns};
  const MarkovModel mm = characterize_gates(plan_step_factory(plan), data.preparations, data.pool,
                                            timing, plan.markov_shots, stream_seed(plan.seed, 500));
  const auto keys = held_out_keys(data, order, plan.basis_size);
  const SplitResult pt = evaluate_split(data, order, plan.basis_size);
  const Comparison c = compare(pt.fidelities, markov_fidelities(mm, data, keys));
  json r = make_record(plan, Stage::Markov, "markov_comparison");
  r["n"] = plan.basis_size;
  r["markov_shots"] = plan.markov_shots;
  r["tensor_box"] = box_json(c.tensor);
  r["markov_box"] = box_json(c.markov);
  r["delta_box"] = box_json(c.delta);
  r["deltas"] = c.deltas;
  if (bootstrappable(plan) && plan.markov_shots > 0) {
    const auto ct = bootstrap_ci(data, order, plan.basis_size, plan.bootstrap_resamples,
                                 stream_seed(plan.seed, 510), {}, median_fidelity_stat);
    const auto cm = markov_bootstrap_ci(mm, data, keys, plan.bootstrap_resamples,
                                        stream_seed(plan.seed, 510));
    r["tensor_median_ci"] = ci_json(ct);
    r["markov_median_ci"] = ci_json(cm);
    r["overlap"] = ct.overlaps(cm);
  }
  store.append(r);
}

void decouple(const ExperimentPlan& plan, ResultsStore& store) {
  const auto [g, zeta] = coupling_of(plan, "decouple");
  DecouplingLayout layout{g, zeta, plan.decouple.pre_idle_ns, plan.decouple.post_idle_ns};
  const auto basis = generate_haar_pool(plan.decouple.basis_size, plan.pool_seed);
  const DecouplingData d = simulate_decoupling_data(decoupling_probe_model(layout), basis,
                                                    plan.decouple.shots, stream_seed(plan.seed, 600));
  const ProcessTensor pt = decoupling_tensor(d);
  const DecouplingResult res = optimize_decoupling(pt, stream_seed(plan.seed, 601));
  const TrajectoryOptions topt{plan.decouple.period_ns, plan.decouple.pre_idle_ns,
                               plan.decouple.horizon_ns, plan.decouple.sample_ns};
  const DecouplingComparison c = apply_periodic_decoupling(layout, res.unitary, topt);
  json r = make_record(plan, Stage::Decouple, "decoupling");
  r["shots"] = plan.decouple.shots;
  r["gate"] = params_json(res.gate);
  r["objective"] = res.objective;
  r["identity_objective"] = decoupling_objective(pt, identity(2));
  r["axis"] = res.rotation.axis;
  r["angle"] = res.rotation.angle;
  r["involution_defect"] = res.involution_defect;
  r["degenerate"] = res.degenerate;
  r["optimal_runs"] = res.optimal_runs;
  r["tensor"] = store.write_sidecar(tensor_sidecar(pt, plan.decouple.basis_size));
  r["idle_min_purity"] = min_purity(c.idle);
  r["decoupled_min_purity"] = min_purity(c.decoupled);
  r["xy4_min_purity"] = min_purity(c.xy4);
  r["idle_peak_negativity"] = peak_negativity(c.idle);
  r["decoupled_peak_negativity"] = peak_negativity(c.decoupled);
  r["xy4_peak_negativity"] = peak_negativity(c.xy4);
  r["trajectories"] = {{"idle", trajectory_json(c.idle)},
                       {"decoupled", trajectory_json(c.decoupled)},
                       {"xy4", trajectory_json(c.xy4)}};
  store.append(r);
}

void synthesize(const ExperimentPlan& plan, ResultsStore& store) {
  const auto [g, zeta] = coupling_of(plan, "synthesize");
  const SynthesisLayout layout{g, zeta, plan.synthesize.idle_ns, plan.synthesize.env_init};
  const SEModel model = synthesis_model(layout);
  const auto basis = generate_haar_pool(plan.synthesize.basis_size, plan.pool_seed);
  const ProcessTensor pt =
      synthesis_tensor(model, basis, plan.synthesize.shots, stream_seed(plan.seed, 700));
  Rng rng(stream_seed(plan.seed, 701));
  const double alpha = 2.0 * kPi * rng.uniform();
  const auto sweep =
      synthesis_sweep(pt, model, alpha, plan.synthesize.grid_points, stream_seed(plan.seed, 702));
  const SweepSummary s = summarize_sweep(sweep);
  json points = json::array();
  for (const auto& p : sweep)
    points.push_back({{"eta", p.eta},
                      {"unitarity", p.result.target_unitarity},
                      {"process_fidelity", p.result.process_fidelity},
                      {"realized_unitarity", p.result.realized_unitarity},
                      {"loss", p.result.loss},
                      {"gate", params_json(p.result.gate)}});
  json r = make_record(plan, Stage::Synthesize, "synthesis_sweep");
  r["alpha"] = alpha;
  r["points"] = points;
  r["peak_fidelity"] = s.peak_fidelity;
  r["achievable_unitarity"] = s.achievable_unitarity;
  r["monotone_below_achievable"] = s.monotone_below_peak;
  r["tensor"] = store.write_sidecar(tensor_sidecar(pt, plan.synthesize.basis_size));
  store.append(r);
}

}  // namespace

Dataset load_dataset(const ExperimentPlan& plan, const ResultsStore& store) {
  Dataset d;
  d.preparations = plan_preparations(plan);
  d.pool = plan_pool(plan);
  d.shots = plan.shots;
  d.seed = plan.seed;
  const auto recs = store.records(plan.name, "circuit");
  if (recs.size() != 3 * d.size())
    throw ConfigError("stage 'characterize' is incomplete for plan '" + plan.name + "': " +
                      std::to_string(recs.size()) + " of " + std::to_string(3 * d.size()) +
                      " circuit records");
  std::vector<std::array<double, 3>> expectations(d.size());
  if (plan.shots > 0) d.records.resize(d.size());
  for (const auto& r : recs) {
    const std::size_t flat = d.index(r.at("prep"), r.at("first"), r.at("second"));
    if (flat >= d.size()) throw ConfigError("circuit record outside the plan's pool");
    const std::string axis = r.at("axis");
    const auto a = static_cast<std::size_t>(axis == "X" ? 0 : axis == "Y" ? 1 : 2);
    if (plan.shots > 0) {
      auto& rec = d.records[flat];
      rec.id = r.at("id");
      rec.shots = r.at("shots");
      rec.seed = r.at("circuit_seed");
      rec.counts[a] = {r.at("counts")[0].get<std::int64_t>(), r.at("counts")[1].get<std::int64_t>()};
    } else {
      expectations[flat][a] = r.at("expectation");
    }
  }
  if (plan.shots > 0) {
    rebuild_states(d);
  } else {
    d.states.resize(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      d.states[i] = bloch_matrix(expectations[i][0], expectations[i][1], expectations[i][2]);
  }
  return d;
}

void run_stage(const ExperimentPlan& plan, ResultsStore& store, Stage stage) {
  switch (stage) {
    case Stage::Characterize: characterize(plan, store); break;
    case Stage::Evaluate: evaluate(plan, store); break;
    case Stage::Memory: memory(plan, store); break;
    case Stage::Markov: markov(plan, store); break;
    case Stage::Decouple: decouple(plan, store); break;
    case Stage::Synthesize: synthesize(plan, store); break;
  }
  store.mark_stage(plan, stage);
}

void run_plan(const ExperimentPlan& plan, ResultsStore& store, std::vector<Stage> stages,
              std::ostream* log) {
  validate(plan);
  if (stages.empty()) stages = plan.stages;
  const auto& all = all_stages();
  std::sort(stages.begin(), stages.end(), [&](Stage a, Stage b) {
    return std::find(all.begin(), all.end(), a) < std::find(all.begin(), all.end(), b);
  });
  stages.erase(std::unique(stages.begin(), stages.end()), stages.end());
  for (Stage s : stages)
    for (Stage pre : stage_prerequisites(s))
      if (std::find(stages.begin(), stages.end(), pre) == stages.end() &&
          !store.stage_complete(plan.name, pre))
        throw ConfigError("stage '" + stage_name(s) + "' requires stage '" + stage_name(pre) +
                          "' to have run for plan '" + plan.name + "'");
  for (Stage s : stages) {
    if (store.stage_complete(plan.name, s)) {
      if (log) *log << "skip " << stage_name(s) << " (already complete)\n";
      continue;
    }
    if (log) *log << "run " << stage_name(s) << "\n";
    run_stage(plan, store, s);
  }
}

json basis_document(int size, std::uint64_t seed) {
  const ControlBasis b = generate_haar_basis(size, seed);
  json us = json::array();
  for (const auto& u : b.unitaries) us.push_back(matrix_to_json(u));
  return {{"schema_version", kSchemaVersion},
          {"kind", "basis"},
          {"seed", seed},
          {"size", size},
          {"unitaries", us},
          {"overlaps", mean_overlaps(b.unitaries)},
          {"order", overlap_order(b.unitaries)}};
}

}  // namespace nmpt::harness
