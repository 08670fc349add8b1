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

#include <string>
#include <vector>

#include "gkc/circuit.hpp"
#include "gkc/decompose.hpp"

namespace gkc {

struct QasmOptions {
  Basis basis = Basis::Native;
  /// Appended after the measurements, one "// " comment line each.
  std::vector<std::string> trailing_comments;
};

/// OpenQASM 2.0 text: header, one qreg and one creg, an X preamble for
/// qubits whose initial state is |1>, one statement per gate and a
/// measurement of each measured qubit. MCT/MCZ are accepted only with at
/// most one positive control; anything wider throws UnloweredGate.
std::string emit_qasm(const Circuit& circuit, const QasmOptions& options = {});

/// "pi/4", "-3*pi/2", "0" for dyadic multiples of pi, otherwise %.17g.
std::string format_angle(double radians);

}  // namespace gkc
