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

#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "nmpt/harness/pipeline.hpp"

namespace nmpt::testing {

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Small enough to run every stage in seconds.
inline nlohmann::json tiny_plan_json() {
  return nlohmann::json::parse(R"({
    "name": "tiny",
    "model": {"kind": "coupled_neighbor", "env_init": "plus"},
    "pool_size": 11, "basis_size": 10, "pool_seed": 5, "seed": 9,
    "shots": 200, "markov_shots": 400, "bootstrap_resamples": 2,
    "out_of_basis_preparations": 1, "evaluate_sizes": [10],
    "memory": {"restarts": 1, "resamples": 2},
    "decouple": {"basis_size": 10, "horizon_ns": 1024, "shots": 200},
    "synthesize": {"basis_size": 10, "grid_points": 3}
  })");
}

inline const std::vector<std::string>& report_files() {
  static const std::vector<std::string> files{
      "infidelity_vs_basis.csv", "boxplot.csv",           "fidelities.csv",
      "memory_bounds.csv",       "markov_comparison.csv", "decoupling_trajectory.csv",
      "synthesis_sweep.csv",     "summary.txt"};
  return files;
}

// Field names and JSON types per record kind, with record counts.
inline std::string store_schema(const std::vector<nlohmann::json>& records) {
  std::map<std::string, std::set<std::string>> keys;
  std::map<std::string, int> counts;
  for (const auto& r : records) {
    const std::string kind = r.at("kind");
    ++counts[kind];
    for (const auto& [k, v] : r.items()) keys[kind].insert(k + ":" + v.type_name());
  }
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [kind, ks] : keys) doc[kind] = {{"count", counts[kind]}, {"fields", ks}};
  return doc.dump(2) + "\n";
}

inline std::filesystem::path golden_path(const std::string& name) {
  return std::filesystem::path(NMPT_GOLDEN_DIR) / name;
}

}  // namespace nmpt::testing
