// Copyright 2026 The t-rot-opt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trot/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <thread>

#include "trot/errors.h"
#include "trot/tgraph.h"
#include "trot/verify.h"

namespace trot::cli {

namespace {

std::string percent_str(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

bool write_text(const std::string &path, const std::string &text, std::ostream &err) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

struct OptimizeArgs {
  std::string input;
  std::string output;
  std::string mode = "inplace";
  bool verify = false;
  bool no_verify = false;
  std::optional<std::size_t> max_verify_qubits;
  bool json = false;
};

int cmd_optimize(const OptimizeArgs &args, std::ostream &out, std::ostream &err) {
  Circuit input = read_qc_file(args.input);
  Circuit expanded = expand(input);
  OutputMode mode = args.mode == "resynth" ? OutputMode::kResynth : OutputMode::kInPlace;
  OptimizeResult details;
  Circuit optimized = optimize_circuit(expanded, mode, &details);

  std::size_t cap = args.max_verify_qubits.value_or(verify_cap_from_env());
  std::string verified = "skipped";
  bool run_check = !args.no_verify && expanded.num_qubits() <= cap;
  if (run_check) {
    bool ok = equivalent_up_to_phase(unitary_of(optimized, cap), unitary_of(expanded, cap));
    verified = ok ? "equivalent" : "NOT equivalent";
  } else if (args.verify) {
    err << "warning: " << expanded.num_qubits() << " qubits exceeds the verification cap of "
        << cap << "; skipping\n";
  }

  if (!args.output.empty() && !write_text(args.output, write_qc(optimized), err)) {
    return kExitInputError;
  }

  GateCounts before = counts(expanded);
  GateCounts after = counts(optimized);
  TCountReduction reduction = t_count_reduction(expanded, optimized);
  nlohmann::ordered_json record = {
      {"qubits", expanded.num_qubits()},
      {"t_before", before.t_count},
      {"t_after", after.t_count},
      {"cnot_before", before.cnot_count},
      {"cnot_after", after.cnot_count},
      {"reduction_percent", percent_str(reduction.percent)},
      {"cancellations", details.stats.cancellations},
      {"merges", details.stats.merges},
      {"comparisons", details.stats.comparisons},
      {"verification", verified},
  };
  if (args.json) {
    out << record.dump(2) << '\n';
  } else {
    for (const auto &[key, value] : record.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  if (verified == "NOT equivalent") {
    err << "error: optimized circuit is not equivalent to the input\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_stats(const std::string &input, bool json, std::ostream &out) {
  Circuit circuit = read_qc_file(input);
  GateCounts raw = counts(circuit);
  GateCounts expanded = counts(expand(circuit));
  nlohmann::ordered_json record = {
      {"qubits", circuit.num_qubits()},
      {"gates", raw.gate_count},
      {"t_count", raw.t_count},
      {"cnot_count", raw.cnot_count},
      {"h_count", raw.h_count},
      {"expanded_t_count", expanded.t_count},
      {"expanded_cnot_count", expanded.cnot_count},
  };
  for (const auto &[kind, n] : raw.per_kind) {
    record["count_" + std::string(gate_name(kind))] = n;
  }
  if (json) {
    out << record.dump(2) << '\n';
  } else {
    for (const auto &[key, value] : record.items()) out << key << ": " << value.dump() << '\n';
  }
  return kExitOk;
}

struct TDepthArgs {
  std::string input;
  std::string output;
  std::string dot;
  bool no_optimize = false;
  bool ancilla = false;
  bool alap = false;
};

int cmd_tdepth(const TDepthArgs &args, std::ostream &out, std::ostream &err) {
  Circuit expanded = expand(read_qc_file(args.input));
  RotationForm form = to_rotation_form(expanded);
  if (!args.no_optimize) form = optimize(form).form;
  TGraph graph = build_tgraph(form);
  out << "rotations: " << form.rotations.size() << '\n';
  out << "edges: " << graph.num_edges() << '\n';
  out << "t_depth: " << t_depth_bound(graph) << '\n';
  if (!args.dot.empty() && !write_text(args.dot, to_dot(graph, form.rotations), err)) {
    return kExitInputError;
  }
  if (args.ancilla) {
    LayeredCircuit layered =
        layered_circuit(form, args.alap ? LayerPolicy::kAlap : LayerPolicy::kAsap);
    out << "ancillas: " << layered.schedule.ancilla_count << '\n';
    out << "layered_t_depth: " << circuit_t_depth(layered.circuit) << '\n';
    std::string text = write_qc(layered.circuit);
    if (args.output.empty()) {
      out << text;
    } else if (!write_text(args.output, text, err)) {
      return kExitInputError;
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string &a, const std::string &b, std::optional<std::size_t> max_qubits,
               std::ostream &out, std::ostream &err) {
  Circuit left = read_qc_file(a);
  Circuit right = read_qc_file(b);
  // Extra trailing qubits on one side are treated as ancillas starting in |0>.
  bool swapped = left.num_qubits() < right.num_qubits();
  const Circuit &wide = swapped ? right : left;
  const Circuit &narrow = swapped ? left : right;
  std::size_t cap = max_qubits.value_or(verify_cap_from_env(kDefaultQubitCap));
  if (wide.num_qubits() > cap) {
    err << "error: " << wide.num_qubits() << " qubits exceeds the verification cap of " << cap
        << '\n';
    return kExitInputError;
  }
  DenseUnitary u_wide = unitary_of(wide, cap);
  DenseUnitary u_narrow = unitary_of(narrow, cap);
  bool ok = wide.num_qubits() == narrow.num_qubits()
                ? equivalent_up_to_phase(u_wide, u_narrow)
                : equivalent_on_clean_ancillas(u_wide, u_narrow);
  out << (ok ? "equivalent" : "not equivalent") << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

BenchRow bench_one(const std::filesystem::path &path, OutputMode mode) {
  BenchRow row;
  row.name = path.filename().string();
  auto start = std::chrono::steady_clock::now();
  try {
    Circuit expanded = expand(read_qc_file(path));
    Circuit optimized = optimize_circuit(expanded, mode);
    GateCounts before = counts(expanded);
    GateCounts after = counts(optimized);
    row.cnot_before = before.cnot_count;
    row.t_before = before.t_count;
    row.cnot_after = after.cnot_count;
    row.t_after = after.t_count;
    row.reduction_percent = t_count_reduction(expanded, optimized).percent;
  } catch (const std::exception &ex) {
    row.error = ex.what();
  }
  row.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::size_t verify_cap_from_env(std::size_t fallback) {
  const char *value = std::getenv("T_ROT_OPT_VERIFY_CAP");
  if (value == nullptr || *value == '\0') return fallback;
  try {
    return static_cast<std::size_t>(std::stoul(value));
  } catch (const std::exception &) {
    return fallback;
  }
}

std::string BenchReport::to_csv() const {
  std::string out = "name,status,cnot_before,t_before,cnot_after,t_after,reduction_percent,wall_time_ms\n";
  char time_buf[32];
  for (const BenchRow &r : rows) {
    out += csv_field(r.name) + ',';
    if (!r.error.empty()) {
      out += csv_field("skipped: " + r.error) + ",,,,,,\n";
      continue;
    }
    std::snprintf(time_buf, sizeof(time_buf), "%.3f", r.wall_time_ms);
    out += "ok," + std::to_string(r.cnot_before) + ',' + std::to_string(r.t_before) + ',' +
           std::to_string(r.cnot_after) + ',' + std::to_string(r.t_after) + ',' +
           percent_str(r.reduction_percent) + ',' + time_buf + '\n';
  }
  out += "average,,,,,," + percent_str(average_reduction) + ",\n";
  out += "maximum,,,,,," + percent_str(max_reduction) + ",\n";
  return out;
}

BenchReport run_bench(const std::filesystem::path &dir, OutputMode mode, std::size_t threads) {
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".qc") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto &a, const auto &b) { return a.filename() < b.filename(); });

  BenchReport report;
  report.rows.resize(files.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(files.size(), 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < files.size(); i = next++) {
        report.rows[i] = bench_one(files[i], mode);
      }
    });
  }
  for (auto &w : workers) w.join();

  std::size_t ok = 0;
  for (const BenchRow &r : report.rows) {
    if (!r.error.empty()) continue;
    ++ok;
    report.average_reduction += r.reduction_percent;
    report.max_reduction = std::max(report.max_reduction, r.reduction_percent);
  }
  if (ok > 0) report.average_reduction /= static_cast<double>(ok);
  return report;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Clifford+T T-count and T-depth optimizer", "t_rot_opt"};
  app.require_subcommand(1);

  OptimizeArgs opt;
  auto *optimize_cmd = app.add_subcommand("optimize", "Reduce the T-count of a .qc circuit");
  optimize_cmd->add_option("input", opt.input, "Input .qc file")->required();
  optimize_cmd->add_option("-o,--output", opt.output, "Write the optimized circuit here");
  optimize_cmd->add_option("--mode", opt.mode, "inplace (default) or resynth")
      ->check(CLI::IsMember({"inplace", "resynth"}));
  auto *verify_flag =
      optimize_cmd->add_flag("--verify", opt.verify, "Check equivalence with the dense oracle");
  optimize_cmd->add_flag("--no-verify", opt.no_verify, "Skip the equivalence check")
      ->excludes(verify_flag);
  optimize_cmd->add_option("--max-verify-qubits", opt.max_verify_qubits,
                           "Largest register the oracle will check (default 6)");
  optimize_cmd->add_flag("--json", opt.json, "Emit statistics as JSON");

  std::string stats_input;
  bool stats_json = false;
  auto *stats_cmd = app.add_subcommand("stats", "Print gate counts");
  stats_cmd->add_option("input", stats_input, "Input .qc file")->required();
  stats_cmd->add_flag("--json", stats_json, "Emit JSON");

  TDepthArgs td;
  auto *tdepth_cmd = app.add_subcommand("tdepth", "Commutation-only T-depth via the T-graph");
  tdepth_cmd->add_option("input", td.input, "Input .qc file")->required();
  tdepth_cmd->add_flag("--no-optimize", td.no_optimize, "Skip T-count reduction first");
  tdepth_cmd->add_flag("--ancilla", td.ancilla, "Emit the layered circuit, adding ancillas");
  tdepth_cmd->add_flag("--alap", td.alap, "Schedule layers as late as possible");
  tdepth_cmd->add_option("-o,--output", td.output, "Write the layered circuit here");
  tdepth_cmd->add_option("--dot", td.dot, "Write the T-graph in Graphviz format");

  std::string verify_a;
  std::string verify_b;
  std::optional<std::size_t> verify_cap;
  auto *verify_cmd = app.add_subcommand("verify", "Compare two circuits up to global phase");
  verify_cmd->add_option("a", verify_a, "First .qc file")->required();
  verify_cmd->add_option("b", verify_b, "Second .qc file")->required();
  verify_cmd->add_option("--max-qubits", verify_cap, "Largest register to check (default 10)");

  std::string bench_dir;
  std::string bench_report = "csv";
  std::string bench_out;
  std::string bench_mode = "inplace";
  std::size_t bench_threads = 0;
  auto *bench_cmd = app.add_subcommand("bench", "Optimize every .qc file in a directory");
  bench_cmd->add_option("dir", bench_dir, "Directory of .qc files")->required();
  bench_cmd->add_option("--report", bench_report, "Report format")
      ->check(CLI::IsMember({"csv"}));
  bench_cmd->add_option("-o,--output", bench_out, "Write the report here instead of stdout");
  bench_cmd->add_option("--mode", bench_mode, "inplace (default) or resynth")
      ->check(CLI::IsMember({"inplace", "resynth"}));
  bench_cmd->add_option("--threads", bench_threads, "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*optimize_cmd) return cmd_optimize(opt, out, err);
    if (*stats_cmd) return cmd_stats(stats_input, stats_json, out);
    if (*tdepth_cmd) return cmd_tdepth(td, out, err);
    if (*verify_cmd) return cmd_verify(verify_a, verify_b, verify_cap, out, err);
    if (*bench_cmd) {
      if (!std::filesystem::is_directory(bench_dir)) {
        err << "error: '" << bench_dir << "' is not a directory\n";
        return kExitInputError;
      }
      BenchReport report = run_bench(
          bench_dir, bench_mode == "resynth" ? OutputMode::kResynth : OutputMode::kInPlace,
          bench_threads);
      for (const BenchRow &r : report.rows) {
        if (!r.error.empty()) err << "warning: skipped " << r.name << ": " << r.error << '\n';
      }
      if (bench_out.empty()) {
        out << report.to_csv();
      } else if (!write_text(bench_out, report.to_csv(), err)) {
        return kExitInputError;
      }
      return kExitOk;
    }
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace trot::cli
