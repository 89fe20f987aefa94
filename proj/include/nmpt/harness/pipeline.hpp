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

#include <ostream>
#include <vector>

#include "nmpt/harness/store.hpp"

namespace nmpt::harness {

/// Runs `stages` (default: the plan's) in dependency order. Completed stages
/// are skipped; a stage whose prerequisite is neither complete nor requested
/// is a ConfigError. Interrupted characterization resumes by skipping
/// circuits already in the store.
void run_plan(const ExperimentPlan& plan, ResultsStore& store, std::vector<Stage> stages = {},
              std::ostream* log = nullptr);

void run_stage(const ExperimentPlan& plan, ResultsStore& store, Stage stage);

/// Dataset rebuilt from the stored circuit records.
Dataset load_dataset(const ExperimentPlan& plan, const ResultsStore& store);

/// Pool, draw-order seed, overlaps and basis order, as written by generate-basis.
nlohmann::json basis_document(int size, std::uint64_t seed);

}  // namespace nmpt::harness
