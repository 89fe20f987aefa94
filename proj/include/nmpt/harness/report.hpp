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
#include <string>
#include <vector>

#include "nmpt/harness/store.hpp"

namespace nmpt::harness {

/// Writes CSV tables and summary.txt into `dir`; returns the files written.
/// Needs the evaluate stage; later stages are included when present.
std::vector<std::filesystem::path> write_report(const ExperimentPlan& plan,
                                                const ResultsStore& store,
                                                const std::filesystem::path& dir);

/// Fixed-format number used in every CSV cell.
std::string csv_number(double x);

}  // namespace nmpt::harness
