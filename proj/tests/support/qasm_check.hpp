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

// A standalone OpenQASM 2.0 reader for tests: checks the grammar and
// register usage of a program and returns its operations.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkc/circuit.hpp"

namespace gkc::qasm_check {

struct SyntaxError : std::runtime_error {
  SyntaxError(int line, const std::string& what);
  int line;
};

struct Operation {
  std::string name;
  std::vector<double> params;
  std::vector<int> qubits;  ///< flattened global qubit indices
};

struct Measurement {
  int qubit = 0;
  int clbit = 0;
};

struct Program {
  std::map<std::string, int> qregs;
  std::map<std::string, int> cregs;
  int num_qubits = 0;
  std::vector<Operation> operations;
  std::vector<Measurement> measurements;
  std::vector<std::string> comments;
};

/// Throws SyntaxError on any violation.
Program parse(const std::string& source);

/// Rebuilds a gkc circuit; u3 becomes Rz Ry Rz, equal up to global phase.
Circuit to_circuit(const Program& program);

}  // namespace gkc::qasm_check
