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

#include "nmpt/harness/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nmpt::harness {

using nlohmann::json;

namespace {

const char* kBoxHeader = "count,mean,median,q1,q3,whisker_low,whisker_high,min,max";

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string box_row(const json& b) {
  std::string s = std::to_string(b.at("count").get<long>());
  for (const char* k : {"mean", "median", "q1", "q3", "whisker_low", "whisker_high", "min", "max"})
    s += "," + csv_number(b.at(k).get<double>());
  return s;
}

std::string ci_cells(const json& ci) {
  if (ci.is_null()) return ",";
  return csv_number(ci.at("lower").get<double>()) + "," + csv_number(ci.at("upper").get<double>());
}

std::string ci_text(const json& ci, int digits) {
  if (ci.is_null()) return "(no interval: exact data)";
  return "[" + fixed(ci.at("lower").get<double>(), digits) + ", " +
         fixed(ci.at("upper").get<double>(), digits) + "]";
}

class Writer {
 public:
  explicit Writer(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw ConfigError("cannot create report directory '" + dir_.string() + "'");
  }
  void write(const std::string& name, const std::string& body) {
    const auto path = dir_ / name;
    std::ofstream out(path);
    out << body;
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    files.push_back(path);
  }
  std::vector<std::filesystem::path> files;

 private:
  std::filesystem::path dir_;
};

}  // namespace

std::string csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10e", x);
  return buf;
}

std::vector<std::filesystem::path> write_report(const ExperimentPlan& plan,
                                                const ResultsStore& store,
                                                const std::filesystem::path& dir) {
  if (!store.stage_complete(plan.name, Stage::Evaluate))
    throw ConfigError("report for plan '" + plan.name + "' requires stage 'evaluate'");
  Writer w(dir);
  std::ostringstream txt;
  txt << "plan: " << plan.name << "\n"
      << "pool: " << plan.pool_size << " unitaries (seed " << plan.pool_seed << "), basis n = "
      << plan.basis_size << ", shots " << plan.shots << ", seed " << plan.seed << "\n\n";

  // (a) mean infidelity vs basis size
  {
    std::ostringstream csv;
    csv << "n,held_out,mean_infidelity,ci_lower,ci_upper\n";
    txt << "Mean held-out infidelity vs basis size\n";
    for (const auto& r : store.records(plan.name, "infidelity_vs_basis")) {
      csv << r.at("n").get<int>() << "," << r.at("held_out").get<long>() << ","
          << csv_number(r.at("mean_infidelity")) << "," << ci_cells(r.at("ci")) << "\n";
      txt << "  n = " << r.at("n").get<int>() << ": " << fixed(r.at("mean_infidelity"), 6) << " "
          << ci_text(r.at("ci"), 6) << "\n";
    }
    w.write("infidelity_vs_basis.csv", csv.str());
  }

  // (b) box statistics at the plan's basis size
  for (const auto& r : store.records(plan.name, "fidelity_table")) {
    const json& b = r.at("infidelity_box");
    w.write("boxplot.csv", std::string("set,n,") + kBoxHeader + "\nin_basis," +
                               std::to_string(r.at("n").get<int>()) + "," + box_row(b) + "\n");
    std::ostringstream seq;
    seq << "id,fidelity\n";
    const auto& ids = r.at("ids");
    const auto& f = r.at("fidelities");
    for (std::size_t i = 0; i < ids.size(); ++i)
      seq << ids[i].get<std::string>() << "," << csv_number(f[i]) << "\n";
    w.write("fidelities.csv", seq.str());
    txt << "\nHeld-out reconstruction at n = " << r.at("n").get<int>() << " ("
        << b.at("count").get<long>() << " sequences)\n"
        << "  median fidelity " << fixed(1.0 - b.at("median").get<double>(), 4) << " "
        << ci_text(r.at("median_fidelity_ci"), 4) << "\n"
        << "  infidelity quartiles " << fixed(b.at("q1"), 6) << " / " << fixed(b.at("median"), 6)
        << " / " << fixed(b.at("q3"), 6) << ", whiskers (1.5 IQR) " << fixed(b.at("whisker_low"), 6)
        << " to " << fixed(b.at("whisker_high"), 6) << "\n";
  }
  for (const auto& r : store.records(plan.name, "out_of_basis_check")) {
    txt << "  out-of-basis preparations: median fidelity "
        << fixed(r.at("out_of_basis_median_fidelity"), 4) << " "
        << ci_text(r.value("out_of_basis_ci", json(nullptr)), 4) << " vs in-basis "
        << fixed(r.at("in_basis_median_fidelity"), 4) << " "
        << ci_text(r.value("in_basis_ci", json(nullptr)), 4) << "\n";
  }

  // (c) memory bounds
  const auto mem = store.records(plan.name, "memory_bound");
  if (!mem.empty()) {
    std::ostringstream csv;
    csv << "placement,cmi_bits,ci_lower,ci_upper,significant\n";
    txt << "\nConditional mutual information lower bounds (bits)\n";
    for (const auto& r : mem) {
      const auto slots = r.at("barrier_slots").get<std::vector<int>>();
      const std::string name = slots.size() == 2 ? "both" : "slot" + std::to_string(slots[0]);
      csv << name << "," << csv_number(r.at("cmi_bits")) << "," << ci_cells(r.at("ci")) << ","
          << (r.at("significant").get<bool>() ? 1 : 0) << "\n";
      txt << "  barrier in " << (slots.size() == 2 ? "slots 1 and 2" : "slot " + std::to_string(slots[0]))
          << ": " << fixed(r.at("cmi_bits"), 5) << " " << ci_text(r.at("ci"), 5) << "\n";
    }
    w.write("memory_bounds.csv", csv.str());
  }

  // (d) Markov comparison
  for (const auto& r : store.records(plan.name, "markov_comparison")) {
    std::ostringstream csv;
    csv << "series," << kBoxHeader << "\n"
        << "tensor_fidelity," << box_row(r.at("tensor_box")) << "\n"
        << "markov_fidelity," << box_row(r.at("markov_box")) << "\n"
        << "paired_delta," << box_row(r.at("delta_box")) << "\n";
    w.write("markov_comparison.csv", csv.str());
    txt << "\nComposable-channel baseline (plain single-length tomography, "
        << r.at("markov_shots").get<long>() << " shots per setting)\n"
        << "  median fidelity: tensor " << fixed(r.at("tensor_box").at("median"), 4) << " "
        << ci_text(r.value("tensor_median_ci", json(nullptr)), 4) << ", Markov "
        << fixed(r.at("markov_box").at("median"), 4) << " "
        << ci_text(r.value("markov_median_ci", json(nullptr)), 4) << "\n"
        << "  median paired difference " << fixed(r.at("delta_box").at("median"), 5) << "\n";
  }

  // (e) control
  for (const auto& r : store.records(plan.name, "decoupling")) {
    std::ostringstream csv;
    csv << "series,time_ns,negativity,mutual_info_bits,purity_q1,purity_q2\n";
    for (const char* series : {"idle", "decoupled", "xy4"})
      for (const auto& p : r.at("trajectories").at(series))
        csv << series << "," << csv_number(p.at("time_ns")) << "," << csv_number(p.at("negativity"))
            << "," << csv_number(p.at("mutual_info_bits")) << "," << csv_number(p.at("purity_q1"))
            << "," << csv_number(p.at("purity_q2")) << "\n";
    w.write("decoupling_trajectory.csv", csv.str());
    const auto axis = r.at("axis").get<std::vector<double>>();
    txt << "\nDecoupling gate: rotation by " << fixed(r.at("angle"), 4) << " rad about ("
        << fixed(axis[0], 4) << ", " << fixed(axis[1], 4) << ", " << fixed(axis[2], 4)
        << "), objective " << fixed(r.at("objective"), 6)
        << (r.at("degenerate").get<bool>() ? " (degenerate optimum)" : "") << "\n"
        << "  min purity: idle " << fixed(r.at("idle_min_purity"), 4) << ", decoupled "
        << fixed(r.at("decoupled_min_purity"), 4) << "; peak negativity: idle "
        << fixed(r.at("idle_peak_negativity"), 4) << ", decoupled "
        << fixed(r.at("decoupled_peak_negativity"), 4) << "\n"
        << "  XY4 reference (extension, not optimized): min purity "
        << fixed(r.at("xy4_min_purity"), 4) << ", peak negativity "
        << fixed(r.at("xy4_peak_negativity"), 4) << "\n";
  }
  for (const auto& r : store.records(plan.name, "synthesis_sweep")) {
    std::ostringstream csv;
    csv << "eta,unitarity,process_fidelity,realized_unitarity,loss\n";
    for (const auto& p : r.at("points"))
      csv << csv_number(p.at("eta")) << "," << csv_number(p.at("unitarity")) << ","
          << csv_number(p.at("process_fidelity")) << "," << csv_number(p.at("realized_unitarity"))
          << "," << csv_number(p.at("loss")) << "\n";
    w.write("synthesis_sweep.csv", csv.str());
    txt << "\nNon-unitary synthesis: peak process fidelity " << fixed(r.at("peak_fidelity"), 4)
        << ", achievable unitarity " << fixed(r.at("achievable_unitarity"), 4)
        << ", fidelity non-increasing below it: "
        << (r.at("monotone_below_achievable").get<bool>() ? "yes" : "no") << "\n";
  }
  w.write("summary.txt", txt.str());
  return w.files;
}

}  // namespace nmpt::harness
