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

#include "nmpt/harness/store.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

namespace nmpt::harness {

using nlohmann::json;

std::string content_hash(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json matrix_to_json(const CMatrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

CMatrix matrix_from_json(const json& j) {
  try {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (static_cast<Eigen::Index>(re.size()) != rows * cols ||
        static_cast<Eigen::Index>(im.size()) != rows * cols)
      throw ConfigError("matrix record: size mismatch");
    CMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) {
        const auto k = static_cast<std::size_t>(r * cols + c);
        m(r, c) = Complex(re[k].get<double>(), im[k].get<double>());
      }
    return m;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("matrix record: ") + e.what());
  }
}

ResultsStore::ResultsStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_ / "sidecars", ec);
  if (ec) throw ConfigError("cannot create store directory '" + dir_.string() + "': " + ec.message());
}

std::vector<json> ResultsStore::load() const {
  std::vector<json> out;
  std::ifstream in(records_path());
  if (!in) return out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    json r;
    try {
      r = json::parse(line);
    } catch (const json::exception& e) {
      throw ConfigError(records_path().string() + ":" + std::to_string(n) + ": " + e.what());
    }
    const std::string v = r.value("schema_version", std::string{});
    const auto dot = v.find('.');
    int major = -1;
    try {
      major = std::stoi(v.substr(0, dot));
    } catch (const std::exception&) {
    }
    if (major != kSchemaMajor)
      throw ConfigError(records_path().string() + ":" + std::to_string(n) +
                        ": unsupported schema_version '" + v + "'");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<json> ResultsStore::records(const std::string& plan, const std::string& kind) const {
  std::vector<json> out;
  for (auto& r : load())
    if (r.value("plan", "") == plan && r.value("kind", "") == kind) out.push_back(std::move(r));
  return out;
}

void ResultsStore::append(const json& record) { append_all({record}); }

void ResultsStore::append_all(const std::vector<json>& records) {
  std::ofstream out(records_path(), std::ios::app);
  if (!out) throw ConfigError("cannot append to '" + records_path().string() + "'");
  for (const auto& r : records) out << r.dump() << '\n';
  out.flush();
  if (!out) throw ConfigError("write failed on '" + records_path().string() + "'");
}

std::string ResultsStore::write_sidecar(const json& payload) {
  const std::string bytes = payload.dump();
  const std::string hash = content_hash(bytes);
  const auto path = dir_ / "sidecars" / (hash + ".json");
  if (!std::filesystem::exists(path)) {
    std::ofstream out(path);
    out << bytes << '\n';
    if (!out) throw ConfigError("cannot write sidecar '" + path.string() + "'");
  }
  return hash;
}

json ResultsStore::read_sidecar(const std::string& hash) const {
  const auto path = dir_ / "sidecars" / (hash + ".json");
  std::ifstream in(path);
  if (!in) throw ConfigError("missing sidecar '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("sidecar '" + path.string() + "': " + e.what());
  }
}

bool ResultsStore::stage_complete(const std::string& plan, Stage stage) const {
  for (const auto& r : records(plan, "stage_complete"))
    if (r.value("stage", "") == stage_name(stage)) return true;
  return false;
}

void ResultsStore::mark_stage(const ExperimentPlan& plan, Stage stage) {
  json r = make_record(plan, stage, "stage_complete");
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  r["timestamp"] = buf;
  append(r);
}

json make_record(const ExperimentPlan& plan, Stage stage, const std::string& kind) {
  return {{"schema_version", kSchemaVersion},
          {"plan", plan.name},
          {"stage", stage_name(stage)},
          {"seed", plan.seed},
          {"kind", kind}};
}

std::vector<json> without_timestamps(std::vector<json> records) {
  for (auto& r : records) r.erase("timestamp");
  return records;
}

}  // namespace nmpt::harness
