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

#include <cstddef>
#include <string_view>
#include <vector>

#include "gkc/circuit.hpp"

namespace gkc {

/// Target gate alphabet of the lowering pass.
enum class Basis {
  /// 1-qubit kinds plus cx, cz, crx and swap.
  Native,
  /// 1-qubit kinds (emitted as u3) plus cx only.
  CxU3,
};

std::string_view basis_name(Basis basis);
/// Accepts "native" or "cx,u3"; throws std::invalid_argument otherwise.
Basis parse_basis(std::string_view text);

/// True when `gate` may appear in a circuit lowered to `basis`.
bool is_elementary(const Gate& gate, Basis basis);

/// Ancilla-free exact expansion of an MCT or MCZ. Negative controls are
/// conjugated by X. Zero controls give X (Z), one control CX (CZ). Two or
/// more controls use the Gray-code construction: for every nonempty subset
/// S of the controls, the parity of S is accumulated with CX gates on its
/// highest control, which then drives CRx(+-pi/2^(q-1)) on the target and
/// an Rz(+-pi/2^q) phase correction, the sign alternating with |S|. MCZ
/// adds H on the target. Equal to the original up to a global phase.
std::vector<Gate> decompose_mct(const Gate& gate);

/// Rewrites a gate already free of MCT/MCZ into `basis`. For CxU3: CZ via
/// H-CX-H, CRx via two CX and Rz halves, SWAP via three CX.
std::vector<Gate> rewrite_for_basis(const Gate& gate, Basis basis = Basis::Native);

/// Number of gates lower_circuit would emit, without building them.
std::size_t lowered_gate_count(const Gate& gate, Basis basis = Basis::Native);
std::size_t lowered_gate_count(const Circuit& circuit, Basis basis = Basis::Native);

/// Every MCT/MCZ decomposed and every gate rewritten into `basis`; roles,
/// initial state and measured qubits carry over. Idempotent.
Circuit lower_circuit(const Circuit& circuit, Basis basis = Basis::Native);

}  // namespace gkc
