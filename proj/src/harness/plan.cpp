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

#include "nmpt/harness/plan.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "nmpt/basis.hpp"

namespace nmpt::harness {

using nlohmann::json;

namespace {

const std::vector<std::pair<Stage, std::string>>& stage_names() {
  static const std::vector<std::pair<Stage, std::string>> n{
      {Stage::Characterize, "characterize"}, {Stage::Evaluate, "evaluate"},
      {Stage::Memory, "memory"},             {Stage::Markov, "markov"},
      {Stage::Decouple, "decouple"},         {Stage::Synthesize, "synthesize"}};
  return n;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ConfigError("plan field '" + path + "': " + what);
}

// Reads j[key] as T if present; wrong types are reported with the field path.
template <typename T>
void read(const json& j, const std::string& path, const std::string& key, T& out) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  const std::string p = join(path, key);
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) bad(p, "expected a boolean");
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) bad(p, "expected an integer");
      if constexpr (std::is_unsigned_v<T>)
        if (v.get<std::int64_t>() < 0) bad(p, "expected a non-negative integer");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) bad(p, "expected a number");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) bad(p, "expected a string");
    }
    out = v.get<T>();
  } catch (const json::exception& e) {
    bad(p, e.what());
  }
}

void reject_unknown(const json& j, const std::string& path, const std::set<std::string>& known) {
  if (!j.is_object()) bad(path.empty() ? "<root>" : path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) bad(join(path, k), "unknown field");
}

EnvInit parse_env(const std::string& s, const std::string& path) {
  if (s == "zero") return EnvInit::Zero;
  if (s == "plus") return EnvInit::Plus;
  if (s == "bell") return EnvInit::Bell;
  bad(path, "must be one of zero, plus, bell");
}

std::string env_name(EnvInit e) {
  switch (e) {
    case EnvInit::Zero: return "zero";
    case EnvInit::Plus: return "plus";
    case EnvInit::Bell: return "bell";
  }
  return "zero";
}

const std::vector<std::pair<ModelKind, std::string>>& kind_names() {
  static const std::vector<std::pair<ModelKind, std::string>> n{
      {ModelKind::CoupledNeighbor, "coupled_neighbor"},
      {ModelKind::MarkovianReset, "markovian_reset"},
      {ModelKind::SwapMemory, "swap_memory"},
      {ModelKind::Noiseless, "noiseless"},
      {ModelKind::Custom, "custom"}};
  return n;
}

CMatrix pauli_string(const std::string& p, const std::string& path) {
  if (p.size() != 2) bad(path, "Pauli string must have two letters");
  auto one = [&](char c) -> const CMatrix& {
    switch (c) {
      case 'I': return pauli(0);
      case 'X': return pauli(1);
      case 'Y': return pauli(2);
      case 'Z': return pauli(3);
    }
    bad(path, "Pauli letters must be I, X, Y or Z");
  };
  return kron(one(p[0]), one(p[1]));
}

void check_positive(double v, const std::string& path) {
  if (!(v > 0.0)) bad(path, "must be > 0");
}

}  // namespace

const std::vector<Stage>& all_stages() {
  static const std::vector<Stage> s{Stage::Characterize, Stage::Evaluate, Stage::Memory,
                                    Stage::Markov,       Stage::Decouple, Stage::Synthesize};
  return s;
}

std::string stage_name(Stage s) {
  for (const auto& [k, n] : stage_names())
    if (k == s) return n;
  return "unknown";
}

Stage parse_stage(const std::string& name) {
  for (const auto& [k, n] : stage_names())
    if (n == name) return k;
  throw ConfigError("unknown stage '" + name + "'");
}

std::vector<Stage> stage_prerequisites(Stage s) {
  switch (s) {
    case Stage::Evaluate:
    case Stage::Memory:
    case Stage::Markov:
      return {Stage::Characterize};
    default:
      return {};
  }
}

ExperimentPlan plan_from_json(const json& j) {
  ExperimentPlan p;
  reject_unknown(j, "",
                 {"schema_version", "name", "model", "pool_size", "basis_size", "overlap_ordering",
                  "pool_seed", "seed", "shots", "markov_shots", "out_of_basis_preparations",
                  "bootstrap_resamples", "evaluate_sizes", "memory", "decouple", "synthesize",
                  "stages"});
  read(j, "", "schema_version", p.schema_version);
  if (p.schema_version != 1) bad("schema_version", "unsupported version " + std::to_string(p.schema_version));
  if (!j.contains("name")) bad("name", "required");
  read(j, "", "name", p.name);
  if (!j.contains("pool_seed")) bad("pool_seed", "required (no ambient randomness)");
  if (!j.contains("seed")) bad("seed", "required (no ambient randomness)");
  read(j, "", "pool_size", p.pool_size);
  read(j, "", "basis_size", p.basis_size);
  read(j, "", "overlap_ordering", p.overlap_ordering);
  read(j, "", "pool_seed", p.pool_seed);
  read(j, "", "seed", p.seed);
  read(j, "", "shots", p.shots);
  read(j, "", "markov_shots", p.markov_shots);
  read(j, "", "out_of_basis_preparations", p.out_of_basis_preparations);
  read(j, "", "bootstrap_resamples", p.bootstrap_resamples);
  read(j, "", "evaluate_sizes", p.evaluate_sizes);

  if (j.contains("model")) {
    const json& m = j.at("model");
    reject_unknown(m, "model",
                   {"kind", "exchange_freq_khz", "zz_freq_khz", "terms", "gate_duration_ns",
                    "idle_duration_ns", "idle_scale", "env_init"});
    std::string kind = "coupled_neighbor", env = "zero";
    read(m, "model", "kind", kind);
    const auto& kn = kind_names();
    const auto it = std::find_if(kn.begin(), kn.end(), [&](const auto& e) { return e.second == kind; });
    if (it == kn.end()) bad("model.kind", "unknown model kind '" + kind + "'");
    p.model.kind = it->first;
    read(m, "model", "exchange_freq_khz", p.model.exchange_freq_khz);
    read(m, "model", "zz_freq_khz", p.model.zz_freq_khz);
    read(m, "model", "gate_duration_ns", p.model.gate_duration_ns);
    read(m, "model", "idle_duration_ns", p.model.idle_duration_ns);
    read(m, "model", "idle_scale", p.model.idle_scale);
    read(m, "model", "env_init", env);
    p.model.env_init = parse_env(env, "model.env_init");
    if (m.contains("terms")) {
      if (!m.at("terms").is_array()) bad("model.terms", "expected an array");
      int i = 0;
      for (const auto& t : m.at("terms")) {
        const std::string tp = "model.terms[" + std::to_string(i++) + "]";
        reject_unknown(t, tp, {"paulis", "freq_khz"});
        HamiltonianTerm term;
        read(t, tp, "paulis", term.paulis);
        read(t, tp, "freq_khz", term.freq_khz);
        pauli_string(term.paulis, tp + ".paulis");
        p.model.terms.push_back(term);
      }
    }
  }
  if (j.contains("memory")) {
    const json& m = j.at("memory");
    reject_unknown(m, "memory", {"restarts", "resamples"});
    read(m, "memory", "restarts", p.memory.restarts);
    read(m, "memory", "resamples", p.memory.resamples);
  }
  if (j.contains("decouple")) {
    const json& d = j.at("decouple");
    reject_unknown(d, "decouple",
                   {"basis_size", "pre_idle_ns", "post_idle_ns", "period_ns", "horizon_ns",
                    "sample_ns", "shots"});
    read(d, "decouple", "basis_size", p.decouple.basis_size);
    read(d, "decouple", "pre_idle_ns", p.decouple.pre_idle_ns);
    read(d, "decouple", "post_idle_ns", p.decouple.post_idle_ns);
    read(d, "decouple", "period_ns", p.decouple.period_ns);
    read(d, "decouple", "horizon_ns", p.decouple.horizon_ns);
    read(d, "decouple", "sample_ns", p.decouple.sample_ns);
    read(d, "decouple", "shots", p.decouple.shots);
  }
  if (j.contains("synthesize")) {
    const json& s = j.at("synthesize");
    reject_unknown(s, "synthesize", {"basis_size", "idle_ns", "env_init", "grid_points", "shots"});
    std::string env = "plus";
    read(s, "synthesize", "basis_size", p.synthesize.basis_size);
    read(s, "synthesize", "idle_ns", p.synthesize.idle_ns);
    read(s, "synthesize", "env_init", env);
    p.synthesize.env_init = parse_env(env, "synthesize.env_init");
    read(s, "synthesize", "grid_points", p.synthesize.grid_points);
    read(s, "synthesize", "shots", p.synthesize.shots);
  }
  if (j.contains("stages")) {
    std::vector<std::string> names;
    read(j, "", "stages", names);
    p.stages.clear();
    for (std::size_t i = 0; i < names.size(); ++i) {
      try {
        p.stages.push_back(parse_stage(names[i]));
      } catch (const ConfigError&) {
        bad("stages[" + std::to_string(i) + "]", "unknown stage '" + names[i] + "'");
      }
    }
  }
  validate(p);
  return p;
}

ExperimentPlan load_plan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open plan file '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("plan file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return plan_from_json(j);
}

json plan_to_json(const ExperimentPlan& p) {
  json terms = json::array();
  for (const auto& t : p.model.terms) terms.push_back({{"paulis", t.paulis}, {"freq_khz", t.freq_khz}});
  std::string kind;
  for (const auto& [k, n] : kind_names())
    if (k == p.model.kind) kind = n;
  std::vector<std::string> stages;
  for (Stage s : p.stages) stages.push_back(stage_name(s));
  return {
      {"schema_version", p.schema_version},
      {"name", p.name},
      {"model",
       {{"kind", kind},
        {"exchange_freq_khz", p.model.exchange_freq_khz},
        {"zz_freq_khz", p.model.zz_freq_khz},
        {"terms", terms},
        {"gate_duration_ns", p.model.gate_duration_ns},
        {"idle_duration_ns", p.model.idle_duration_ns},
        {"idle_scale", p.model.idle_scale},
        {"env_init", env_name(p.model.env_init)}}},
      {"pool_size", p.pool_size},
      {"basis_size", p.basis_size},
      {"overlap_ordering", p.overlap_ordering},
      {"pool_seed", p.pool_seed},
      {"seed", p.seed},
      {"shots", p.shots},
      {"markov_shots", p.markov_shots},
      {"out_of_basis_preparations", p.out_of_basis_preparations},
      {"bootstrap_resamples", p.bootstrap_resamples},
      {"evaluate_sizes", p.evaluate_sizes},
      {"memory", {{"restarts", p.memory.restarts}, {"resamples", p.memory.resamples}}},
      {"decouple",
       {{"basis_size", p.decouple.basis_size},
        {"pre_idle_ns", p.decouple.pre_idle_ns},
        {"post_idle_ns", p.decouple.post_idle_ns},
        {"period_ns", p.decouple.period_ns},
        {"horizon_ns", p.decouple.horizon_ns},
        {"sample_ns", p.decouple.sample_ns},
        {"shots", p.decouple.shots}}},
      {"synthesize",
       {{"basis_size", p.synthesize.basis_size},
        {"idle_ns", p.synthesize.idle_ns},
        {"env_init", env_name(p.synthesize.env_init)},
        {"grid_points", p.synthesize.grid_points},
        {"shots", p.synthesize.shots}}},
      {"stages", stages}};
}

void validate(const ExperimentPlan& p) {
  if (p.name.empty()) bad("name", "must not be empty");
  if (p.pool_size < 11 || p.pool_size > 28) bad("pool_size", "must be in [11, 28]");
  if (p.basis_size < 10 || p.basis_size > 28) bad("basis_size", "must be in [10, 28]");
  if (p.basis_size >= p.pool_size) bad("basis_size", "must be smaller than pool_size");
  if (p.shots < 0) bad("shots", "must be >= 0 (0 means exact states)");
  if (p.markov_shots < 0) bad("markov_shots", "must be >= 0");
  if (p.out_of_basis_preparations < 0) bad("out_of_basis_preparations", "must be >= 0");
  if (p.bootstrap_resamples != 0 && p.bootstrap_resamples < 2)
    bad("bootstrap_resamples", "must be 0 or at least 2");
  for (std::size_t i = 0; i < p.evaluate_sizes.size(); ++i) {
    const int n = p.evaluate_sizes[i];
    if (n < 10 || n >= p.pool_size)
      bad("evaluate_sizes[" + std::to_string(i) + "]", "must be in [10, pool_size)");
  }
  check_positive(p.model.gate_duration_ns, "model.gate_duration_ns");
  check_positive(p.model.idle_duration_ns, "model.idle_duration_ns");
  check_positive(p.model.idle_scale, "model.idle_scale");
  if (p.model.kind == ModelKind::Custom && p.model.terms.empty())
    bad("model.terms", "a custom model needs at least one term");
  if (p.model.kind == ModelKind::MarkovianReset && p.model.env_init == EnvInit::Bell)
    bad("model.env_init", "bell is not available for markovian_reset");
  if (p.memory.restarts < 1) bad("memory.restarts", "must be >= 1");
  if (p.memory.resamples != 0 && p.memory.resamples < 2) bad("memory.resamples", "must be 0 or >= 2");
  if (p.decouple.basis_size < 10 || p.decouple.basis_size > 28)
    bad("decouple.basis_size", "must be in [10, 28]");
  if (p.decouple.pre_idle_ns < 0.0) bad("decouple.pre_idle_ns", "must be >= 0");
  check_positive(p.decouple.post_idle_ns, "decouple.post_idle_ns");
  check_positive(p.decouple.period_ns, "decouple.period_ns");
  check_positive(p.decouple.horizon_ns, "decouple.horizon_ns");
  check_positive(p.decouple.sample_ns, "decouple.sample_ns");
  if (p.decouple.shots < 0) bad("decouple.shots", "must be >= 0");
  if (p.synthesize.basis_size < 10 || p.synthesize.basis_size > 28)
    bad("synthesize.basis_size", "must be in [10, 28]");
  check_positive(p.synthesize.idle_ns, "synthesize.idle_ns");
  if (p.synthesize.grid_points < 2) bad("synthesize.grid_points", "must be >= 2");
  if (p.synthesize.shots < 0) bad("synthesize.shots", "must be >= 0");
  if (p.synthesize.env_init == EnvInit::Bell) bad("synthesize.env_init", "must be zero or plus");
  if (p.stages.empty()) bad("stages", "must not be empty");
}

CMatrix plan_hamiltonian(const ModelConfig& m) {
  switch (m.kind) {
    case ModelKind::Custom: {
      CMatrix h = CMatrix::Zero(4, 4);
      for (const auto& t : m.terms)
        h += 0.5 * khz_to_rad_per_ns(t.freq_khz) * pauli_string(t.paulis, "model.terms");
      return h;
    }
    case ModelKind::Noiseless:
      return CMatrix::Zero(4, 4);
    default:
      return exchange_hamiltonian(khz_to_rad_per_ns(m.exchange_freq_khz),
                                  khz_to_rad_per_ns(m.zz_freq_khz));
  }
}

SEModel build_model(const ExperimentPlan& plan) {
  const ModelConfig& m = plan.model;
  const double t = m.step_ns();
  CouplingConfig cfg;
  cfg.exchange_khz = m.exchange_freq_khz;
  cfg.zz_khz = m.zz_freq_khz;
  cfg.interval_ns = {t, t, t};
  cfg.env_init = m.env_init;
  switch (m.kind) {
    case ModelKind::CoupledNeighbor: return coupled_neighbor_model(cfg);
    case ModelKind::MarkovianReset: return markovian_reset_model(cfg);
    case ModelKind::SwapMemory: return swap_memory_model();
    case ModelKind::Noiseless: return noiseless_model(3);
    case ModelKind::Custom: {
      const CMatrix h = plan_hamiltonian(m);
      SEModel s;
      s.env_dim = 2;
      s.probeable = true;
      for (int j = 0; j < 3; ++j) s.intervals.push_back({evolve(h, t), t});
      s.initial_se = initial_state(m.env_init, 2);
      s.validate();
      return s;
    }
  }
  throw ConfigError("model.kind: unsupported");
}

StepModelFactory plan_step_factory(const ExperimentPlan& plan) {
  const ModelConfig m = plan.model;
  if (m.kind == ModelKind::SwapMemory)
    throw ConfigError("plan field 'model.kind': the markov stage needs a time-independent coupling");
  if (m.kind == ModelKind::Noiseless)
    return [](double) { return noiseless_model(1); };
  const CMatrix h = plan_hamiltonian(m);
  return [h, m](double duration_ns) {
    if (!(duration_ns > 0.0)) throw ConfigError("step model: durations must be positive");
    SEModel s;
    s.env_dim = 2;
    s.probeable = true;
    s.intervals.push_back({evolve(h, duration_ns), duration_ns});
    s.initial_se = initial_state(m.env_init, 2);
    s.validate();
    return s;
  };
}

std::vector<CMatrix> plan_pool(const ExperimentPlan& plan) {
  return generate_haar_pool(plan.pool_size, plan.pool_seed);
}

std::vector<int> plan_order(const ExperimentPlan& plan, const std::vector<CMatrix>& pool) {
  return plan.overlap_ordering ? overlap_order(pool) : identity_order(pool.size());
}

std::vector<CMatrix> plan_preparations(const ExperimentPlan& plan) {
  std::vector<CMatrix> preps = preparation_unitaries();
  if (plan.out_of_basis_preparations > 0) {
    const auto extra = generate_haar_pool(plan.out_of_basis_preparations, stream_seed(plan.seed, 4242));
    preps.insert(preps.end(), extra.begin(), extra.end());
  }
  return preps;
}

}  // namespace nmpt::harness
