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

// nmpt: command-line front end for plans, stores and reports.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "nmpt/harness/pipeline.hpp"
#include "nmpt/harness/report.hpp"

namespace {

namespace h = nmpt::harness;

constexpr int kConfigExit = 2;
constexpr int kNumericalExit = 3;

struct Common {
  std::string plan;
  std::string out = "results";
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> shots;
  std::vector<std::string> stages;
};

void add_common(CLI::App* cmd, Common& c, bool with_stage) {
  cmd->add_option("--plan", c.plan, "Plan file (JSON)")->required();
  cmd->add_option("--out", c.out, "Results directory")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Override the plan's experiment seed");
  cmd->add_option("--shots", c.shots, "Override the plan's shots per setting");
  if (with_stage) cmd->add_option("--stage", c.stages, "Stage(s) to run (default: the plan's)");
}

// Overrides change the plan identity so stored records never mix.
h::ExperimentPlan resolve(const Common& c) {
  h::ExperimentPlan p = h::load_plan(c.plan);
  if (c.seed) {
    p.seed = *c.seed;
    p.name += "+seed" + std::to_string(*c.seed);
  }
  if (c.shots) {
    p.shots = *c.shots;
    p.name += "+shots" + std::to_string(*c.shots);
  }
  h::validate(p);
  return p;
}

int run_stages(const Common& c, std::vector<h::Stage> stages) {
  const h::ExperimentPlan plan = resolve(c);
  for (const auto& s : c.stages) stages.push_back(h::parse_stage(s));
  h::ResultsStore store(c.out);
  h::run_plan(plan, store, stages, &std::cerr);
  std::cout << "plan '" << plan.name << "': store " << store.records_path().string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted process tensor tomography toolkit"};
  app.require_subcommand(1);

  std::uint64_t basis_seed = 0;
  int basis_size = 28;
  std::string basis_out = "results";
  auto* gen = app.add_subcommand("generate-basis", "Draw a Haar pool and its overlap order");
  gen->add_option("--seed", basis_seed, "Pool seed")->required();
  gen->add_option("--size", basis_size, "Pool size")->capture_default_str();
  gen->add_option("--out", basis_out, "Output directory")->capture_default_str();

  Common run_c, eval_c, mem_c, markov_c, dec_c, syn_c, rep_c;
  auto* run = app.add_subcommand("run-plan", "Simulate and run the plan's stages");
  add_common(run, run_c, true);
  auto* eval = app.add_subcommand("evaluate", "Held-out reconstruction fidelities");
  add_common(eval, eval_c, false);
  auto* mem = app.add_subcommand("memory-bound", "CMI memory bounds");
  add_common(mem, mem_c, false);
  auto* markov = app.add_subcommand("compare-markov", "Composable-channel baseline comparison");
  add_common(markov, markov_c, false);
  auto* dec = app.add_subcommand("optimize-decoupling", "Decoupling gate search and trajectories");
  add_common(dec, dec_c, false);
  auto* syn = app.add_subcommand("synthesize-gate", "Non-unitary gate synthesis sweep");
  add_common(syn, syn_c, false);
  auto* rep = app.add_subcommand("report", "CSV tables and text summary");
  add_common(rep, rep_c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigExit;
  }

  try {
    if (gen->parsed()) {
      const auto doc = h::basis_document(basis_size, basis_seed);
      std::filesystem::create_directories(basis_out);
      const auto path = std::filesystem::path(basis_out) / "basis.json";
      std::ofstream out(path);
      out << doc.dump(2) << "\n";
      if (!out) throw nmpt::ConfigError("cannot write '" + path.string() + "'");
      std::cout << path.string() << " " << h::content_hash(doc.dump()) << "\n";
      return 0;
    }
    if (run->parsed()) return run_stages(run_c, {});
    if (eval->parsed()) return run_stages(eval_c, {h::Stage::Evaluate});
    if (mem->parsed()) return run_stages(mem_c, {h::Stage::Memory});
    if (markov->parsed()) return run_stages(markov_c, {h::Stage::Markov});
    if (dec->parsed()) return run_stages(dec_c, {h::Stage::Decouple});
    if (syn->parsed()) return run_stages(syn_c, {h::Stage::Synthesize});
    if (rep->parsed()) {
      const h::ExperimentPlan plan = resolve(rep_c);
      const h::ResultsStore store(rep_c.out);
      for (const auto& f : h::write_report(plan, store, std::filesystem::path(rep_c.out) / "report"))
        std::cout << f.string() << "\n";
      return 0;
    }
  } catch (const nmpt::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigExit;
  } catch (const nmpt::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericalExit;
  }
  return 0;
}
