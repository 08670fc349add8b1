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

#pragma once

#include <cstdint>
#include <optional>

#include "gkc/circuit.hpp"
#include "gkc/graph.hpp"
#include "gkc/oracle.hpp"

namespace gkc {

/// Inversion about the mean on `data`: H, X, multi-controlled Z on the last
/// data qubit, X, H. Equals 2|s><s| - I up to a global phase.
Circuit build_diffusion(const QubitRange& data, int num_qubits);
Circuit build_diffusion(int data_width);

/// floor(pi/4 * sqrt(N/M)). Throws NoSolutions when M is zero.
int optimal_iterations(std::uint64_t search_space, std::uint64_t solution_count);

/// Closed-form probability of measuring a marked state after t iterations,
/// sin^2((2t+1) asin(sqrt(M/N))).
double grover_success_probability(std::uint64_t search_space, std::uint64_t solution_count, int iterations);

struct GroverJob {
  Oracle oracle;
  Circuit circuit;
  int iterations = 0;
  std::optional<std::uint64_t> solution_count;
  std::uint64_t search_space = 0;

  int data_width() const { return oracle.plan.layout.data.count; }
};

/// State preparation (X on qubits the oracle expects in |1>, H on data and
/// output) followed by `iterations` rounds of oracle + diffusion. Without
/// an explicit count, M comes from brute-force enumeration and NoSolutions
/// is thrown for uncolorable instances. The result starts from |0...0>.
GroverJob build_grover(const Instance& instance, OracleMode mode = OracleMode::Strict,
                       std::optional<int> iterations = std::nullopt);

}  // namespace gkc
