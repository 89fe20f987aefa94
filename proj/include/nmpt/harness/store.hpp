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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "nmpt/harness/plan.hpp"

namespace nmpt::harness {

inline constexpr int kSchemaMajor = 1;
inline constexpr const char* kSchemaVersion = "1.0";

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string content_hash(const std::string& bytes);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

/// Append-only line-delimited JSON store in `dir/store.jsonl`, with large
/// payloads in `dir/sidecars/<hash>.json`.
class ResultsStore {
 public:
  explicit ResultsStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path records_path() const { return dir_ / "store.jsonl"; }

  /// All records; throws ConfigError on a record with an unknown major version.
  std::vector<nlohmann::json> load() const;
  std::vector<nlohmann::json> records(const std::string& plan, const std::string& kind) const;

  void append(const nlohmann::json& record);
  void append_all(const std::vector<nlohmann::json>& records);

  /// Writes the payload (if not already present) and returns its hash.
  std::string write_sidecar(const nlohmann::json& payload);
  nlohmann::json read_sidecar(const std::string& hash) const;

  bool stage_complete(const std::string& plan, Stage stage) const;
  /// The run marker is the only record carrying a wall-clock timestamp.
  void mark_stage(const ExperimentPlan& plan, Stage stage);

 private:
  std::filesystem::path dir_;
};

/// Envelope common to every record.
nlohmann::json make_record(const ExperimentPlan& plan, Stage stage, const std::string& kind);

/// Copy of a record stream without timestamp fields, for comparisons.
std::vector<nlohmann::json> without_timestamps(std::vector<nlohmann::json> records);

}  // namespace nmpt::harness
