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

#include "gkc/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gkc/classical.hpp"
#include "gkc/error.hpp"

namespace gkc {

Circuit build_diffusion(const QubitRange& data, int num_qubits) {
  if (data.count < 1) throw Error(ErrorCode::WidthMismatch, "diffusion needs at least one data qubit");
  Circuit fragment(num_qubits);
  for (int q = data.begin; q < data.end(); ++q) fragment.append(Gate::h(q));
  for (int q = data.begin; q < data.end(); ++q) fragment.append(Gate::x(q));
  std::vector<int> controls;
  for (int q = data.begin; q + 1 < data.end(); ++q) controls.push_back(q);
  fragment.append(Gate::mcz(positive(controls), data.end() - 1));
  for (int q = data.begin; q < data.end(); ++q) fragment.append(Gate::x(q));
  for (int q = data.begin; q < data.end(); ++q) fragment.append(Gate::h(q));
  return fragment;
}

Circuit build_diffusion(int data_width) {
  Circuit fragment = build_diffusion(QubitRange{0, data_width}, data_width);
  std::vector<QubitRole> roles(static_cast<std::size_t>(data_width), QubitRole::Data);
  fragment.set_roles(std::move(roles));
  return fragment;
}

int optimal_iterations(std::uint64_t search_space, std::uint64_t solution_count) {
  if (solution_count == 0) throw Error(ErrorCode::NoSolutions, "no marked states");
  if (solution_count > search_space) throw Error(ErrorCode::WidthMismatch, "more solutions than states");
  const double ratio = static_cast<double>(search_space) / static_cast<double>(solution_count);
  return static_cast<int>(std::floor(std::numbers::pi / 4 * std::sqrt(ratio)));
}

double grover_success_probability(std::uint64_t search_space, std::uint64_t solution_count, int iterations) {
  const double theta = std::asin(std::sqrt(static_cast<double>(solution_count) / static_cast<double>(search_space)));
  const double s = std::sin((2 * iterations + 1) * theta);
  return s * s;
}

GroverJob build_grover(const Instance& instance, OracleMode mode, std::optional<int> iterations) {
  GroverJob job;
  job.oracle = synthesize_oracle(instance, mode);
  job.search_space = std::uint64_t{1} << instance.data_width();
  if (iterations) {
    if (*iterations < 0) throw std::invalid_argument("iteration count must be non-negative");
    job.iterations = *iterations;
  } else {
    const auto found = solutions(instance);
    job.solution_count = found.count();
    job.iterations = optimal_iterations(job.search_space, found.count());
  }

  const auto& layout = job.oracle.plan.layout;
  const auto& oracle = job.oracle.circuit;
  Circuit& circuit = job.circuit;
  circuit = Circuit(layout.roles(), std::vector<InitialState>(layout.num_qubits(), InitialState::Zero));
  for (int q = 0; q < layout.num_qubits(); ++q) {
    if (oracle.initial_state()[q] == InitialState::One) circuit.append(Gate::x(q));
  }
  for (int q = layout.data.begin; q < layout.data.end(); ++q) circuit.append(Gate::h(q));
  circuit.append(Gate::h(layout.output));
  const Circuit diffusion = build_diffusion(layout.data, layout.num_qubits());
  for (int round = 0; round < job.iterations; ++round) {
    circuit.append(oracle);
    circuit.append(diffusion);
  }
  return job;
}

}  // namespace gkc
