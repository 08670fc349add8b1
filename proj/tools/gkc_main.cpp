// Copyright 2026 The gkc Authors
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

// gkc: Grover k-coloring circuit synthesis driver.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gkc/classical.hpp"
#include "gkc/decompose.hpp"
#include "gkc/error.hpp"
#include "gkc/grover.hpp"
#include "gkc/oracle.hpp"
#include "gkc/pipeline.hpp"
#include "gkc/qasm.hpp"
#include "gkc/route.hpp"
#include "gkc/sim.hpp"

namespace {

using nlohmann::json;

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Common {
  std::string graph_file;
  int k = 3;
  std::string mode = "strict";
  std::string basis = "native";
  std::string prefix;
};

struct Options {
  Common common;
  std::optional<int> iterations;
  std::string topology;
  std::uint64_t seed = 0;
  std::string circuit = "grover";
  bool no_lower = false;
  std::string vertices_range = "2:10";
  std::string ks = "2,3,4,8";
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw gkc::Error(gkc::ErrorCode::MalformedMatrix, "cannot write " + path);
  out << text;
}

void emit(const Common& c, const json& report, const std::string& suffix_hint = ".json") {
  std::cout << report.dump(2) << '\n';
  if (!c.prefix.empty()) write_file(c.prefix + suffix_hint, report.dump(2) + "\n");
}

gkc::Instance load_instance(const Common& c) { return gkc::make_instance(gkc::load_graph(c.graph_file), c.k); }

gkc::Circuit stage_circuit(const gkc::Instance& instance, const Options& o, json& report) {
  const auto mode = gkc::parse_mode(o.common.mode);
  if (o.circuit == "oracle") {
    auto oracle = gkc::synthesize_oracle(instance, mode);
    report["qubits"] = gkc::layout_json(oracle.plan.layout);
    return std::move(oracle.circuit);
  }
  auto job = gkc::build_grover(instance, mode, o.iterations);
  report["qubits"] = gkc::layout_json(job.oracle.plan.layout);
  report["t"] = job.iterations;
  report["M"] = job.solution_count ? json(*job.solution_count) : json(nullptr);
  report["N"] = job.search_space;
  return std::move(job.circuit);
}

json base_report(const char* command, const gkc::Instance& instance, const Options& o) {
  return {{"command", command},
          {"graph", gkc::graph_json(instance.graph)},
          {"k", instance.k},
          {"mode", gkc::mode_name(gkc::parse_mode(o.common.mode))}};
}

int cmd_synth(const Options& o) {
  const auto instance = load_instance(o.common);
  const auto basis = gkc::parse_basis(o.common.basis);
  const auto oracle = gkc::synthesize_oracle(instance, gkc::parse_mode(o.common.mode));
  const auto lowered = gkc::lower_circuit(oracle.circuit, basis);
  if (!o.common.prefix.empty()) {
    write_file(o.common.prefix + ".oracle.txt", gkc::describe(oracle.circuit));
    write_file(o.common.prefix + ".qasm", gkc::emit_qasm(lowered, {basis, {}}));
  }
  emit(o.common, gkc::synth_report(instance, oracle, lowered, basis));
  return 0;
}

int cmd_grover(const Options& o) {
  const auto instance = load_instance(o.common);
  auto report = base_report("grover", instance, o);
  Options copy = o;
  copy.circuit = "grover";
  const auto circuit = stage_circuit(instance, copy, report);
  report["gates"] = {{"unlowered", gkc::stats_json(gkc::stats(circuit))}};
  if (!o.common.prefix.empty()) write_file(o.common.prefix + ".grover.txt", gkc::describe(circuit));
  emit(o.common, report);
  return 0;
}

int cmd_lower(const Options& o) {
  const auto instance = load_instance(o.common);
  const auto basis = gkc::parse_basis(o.common.basis);
  auto report = base_report("lower", instance, o);
  const auto circuit = stage_circuit(instance, o, report);
  const auto lowered = gkc::lower_circuit(circuit, basis);
  report["circuit"] = o.circuit;
  report["basis"] = gkc::basis_name(basis);
  report["gates"] = {{"unlowered", gkc::stats_json(gkc::stats(circuit))},
                     {"lowered", gkc::stats_json(gkc::stats(lowered))}};
  if (!o.common.prefix.empty()) write_file(o.common.prefix + ".qasm", gkc::emit_qasm(lowered, {basis, {}}));
  emit(o.common, report);
  return 0;
}

int cmd_route(const Options& o) {
  const auto instance = load_instance(o.common);
  const auto basis = gkc::parse_basis(o.common.basis);
  const auto coupling = gkc::coupling_from_spec(o.topology);
  auto report = base_report("route", instance, o);
  const auto lowered = gkc::lower_circuit(stage_circuit(instance, o, report), basis);
  gkc::RoutingOptions options;
  options.seed = o.seed;
  const auto result = gkc::sabre_route(lowered, coupling, options);
  report["circuit"] = o.circuit;
  report["basis"] = gkc::basis_name(basis);
  report["routing"] = {{"physical_qubits", coupling.num_physical()},
                       {"swap_count", result.swap_count},
                       {"constraints_ok", gkc::verify_constraints(result.routed, coupling)},
                       {"seed", o.seed},
                       {"initial_layout", result.initial.logical_to_physical},
                       {"final_layout", result.final.logical_to_physical},
                       {"gates", gkc::stats_json(gkc::stats(result.routed))}};
  if (!o.common.prefix.empty()) {
    write_file(o.common.prefix + ".qasm", gkc::emit_qasm(result.routed, {basis, gkc::layout_comments(result.final)}));
  }
  emit(o.common, report);
  return 0;
}

int cmd_simulate(const Options& o) {
  const auto instance = load_instance(o.common);
  auto report = base_report("simulate", instance, o);
  report["circuit"] = o.circuit;
  const auto classical = gkc::solutions(instance);
  if (o.circuit == "oracle") {
    const auto oracle = gkc::synthesize_oracle(instance, gkc::parse_mode(o.common.mode));
    report["qubits"] = gkc::layout_json(oracle.plan.layout);
    const auto marked = gkc::sim::phase_pattern(oracle.circuit, oracle.plan.layout);
    report["marked_states"] = marked;
    report["M"] = classical.count();
    report["N"] = classical.space;
    report["solutions_match"] = marked == classical.bitstrings;
    emit(o.common, report);
    return 0;
  }
  gkc::RunConfig config;
  config.mode = gkc::parse_mode(o.common.mode);
  config.iterations = o.iterations;
  config.lower = false;
  auto outcome = gkc::run_pipeline(instance, config);
  outcome.report["command"] = "simulate";
  outcome.report["circuit"] = o.circuit;
  std::cerr << outcome.histogram;
  emit(o.common, outcome.report);
  return 0;
}

int cmd_run(const Options& o) {
  const auto instance = load_instance(o.common);
  gkc::RunConfig config;
  config.mode = gkc::parse_mode(o.common.mode);
  config.iterations = o.iterations;
  config.basis = gkc::parse_basis(o.common.basis);
  config.lower = !o.no_lower;
  config.seed = o.seed;
  if (!o.topology.empty()) config.topology = gkc::coupling_from_spec(o.topology);
  auto outcome = gkc::run_pipeline(instance, config);
  if (o.common.prefix.empty()) {
    std::cerr << outcome.histogram;
  } else {
    write_file(o.common.prefix + ".hist.txt", outcome.histogram);
    if (outcome.qasm) write_file(o.common.prefix + ".qasm", *outcome.qasm);
  }
  emit(o.common, outcome.report);
  return 0;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw gkc::Error(gkc::ErrorCode::InvalidK, "bad integer list '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

int cmd_cost(const Options& o) {
  const auto colon = o.vertices_range.find(':');
  const auto bounds = parse_int_list(colon == std::string::npos
                                         ? o.vertices_range + "," + o.vertices_range
                                         : o.vertices_range.substr(0, colon) + "," + o.vertices_range.substr(colon + 1));
  if (bounds.size() != 2 || bounds[0] < 1 || bounds[1] < bounds[0] || bounds[1] > 10) {
    throw gkc::Error(gkc::ErrorCode::IndexOutOfRange, "vertex range must satisfy 1 <= lo <= hi <= 10");
  }
  const auto csv = gkc::cost_csv(gkc::cost_table(bounds[0], bounds[1], parse_int_list(o.ks)));
  std::cout << csv;
  if (!o.common.prefix.empty()) write_file(o.common.prefix + ".csv", csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover k-coloring circuit synthesis"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.common.graph_file, "Graph file (.adj matrix or .edg edge list)")->required();
    sub->add_option("--k", o.common.k, "Number of colors")->required();
    sub->add_option("--mode", o.common.mode, "Oracle mode")->check(CLI::IsMember({"strict", "paper"}));
    sub->add_option("-o,--output", o.common.prefix, "Output file prefix");
  };
  auto add_basis = [&](CLI::App* sub) {
    sub->add_option("--basis", o.common.basis, "Target gate alphabet: native or cx,u3");
  };
  auto add_iterations = [&](CLI::App* sub) {
    sub->add_option("--iterations", o.iterations, "Grover iterations (default from the classical solution count)");
  };
  auto add_circuit = [&](CLI::App* sub) {
    sub->add_option("--circuit", o.circuit, "Stage to process")->check(CLI::IsMember({"oracle", "grover"}));
  };

  auto* synth = app.add_subcommand("synth", "Synthesize the coloring oracle");
  add_graph(synth);
  add_basis(synth);

  auto* grover = app.add_subcommand("grover", "Build the full Grover circuit");
  add_graph(grover);
  add_iterations(grover);

  auto* lower = app.add_subcommand("lower", "Lower the oracle or Grover circuit to elementary gates");
  add_graph(lower);
  add_basis(lower);
  add_iterations(lower);
  add_circuit(lower);

  auto* route = app.add_subcommand("route", "Lower and route onto a coupling graph");
  add_graph(route);
  add_basis(route);
  add_iterations(route);
  add_circuit(route);
  route->add_option("--topology", o.topology, "Coupling file (.cpl) or line:N, ring:N, grid:RxC[:COUNT]")->required();
  route->add_option("--seed", o.seed, "Routing tie-break seed");

  auto* simulate = app.add_subcommand("simulate", "Simulate the oracle phase pattern or the Grover circuit");
  add_graph(simulate);
  add_iterations(simulate);
  add_circuit(simulate);

  auto* run = app.add_subcommand("run", "Full pipeline with simulation report");
  add_graph(run);
  add_basis(run);
  add_iterations(run);
  run->add_option("--topology", o.topology, "Coupling file (.cpl) or line:N, ring:N, grid:RxC[:COUNT]");
  run->add_option("--seed", o.seed, "Routing tie-break seed");
  run->add_flag("--no-lower", o.no_lower, "Simulate the unlowered circuit");

  auto* cost = app.add_subcommand("cost", "Qubit and gate cost table on complete graphs");
  cost->add_option("--vertices-range", o.vertices_range, "LO:HI vertex counts (at most 10)");
  cost->add_option("--k", o.ks, "Comma-separated color counts");
  cost->add_option("-o,--output", o.common.prefix, "Output file prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*synth) return cmd_synth(o);
    if (*grover) return cmd_grover(o);
    if (*lower) return cmd_lower(o);
    if (*route) return cmd_route(o);
    if (*simulate) return cmd_simulate(o);
    if (*run) return cmd_run(o);
    if (*cost) return cmd_cost(o);
  } catch (const gkc::Error& e) {
    if (e.code() == gkc::ErrorCode::NoSolutions) {
      // An uncolorable graph is an answer, not a failure.
      const json report = {{"command", app.get_subcommands().front()->get_name()},
                           {"k", o.common.k},
                           {"M", 0},
                           {"colorable", false},
                           {"message", "graph is not " + std::to_string(o.common.k) + "-colorable"}};
      emit(o.common, report);
      return 0;
    }
    std::cerr << "error: " << e.what() << '\n';
    return gkc::is_resource_error(e.code()) ? kExitResource : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
