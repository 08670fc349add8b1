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

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gkc/circuit.hpp"

namespace gkc::sim {

using Amplitude = std::complex<double>;

/// Widest register the simulator accepts. Defaults to 24; the environment
/// variable GKC_QUBIT_CEILING overrides it.
int qubit_ceiling();

/// Dense state over 2^q basis states. Qubit i is bit i of the basis index.
class Statevector {
 public:
  /// |0...0>. Throws TooManyQubits above the ceiling.
  explicit Statevector(int num_qubits);
  static Statevector basis(int num_qubits, std::uint64_t index);
  /// Throws std::invalid_argument unless the length is a power of two and
  /// the norm is one to 1e-9.
  static Statevector from_amplitudes(std::vector<Amplitude> amplitudes);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }
  double norm_squared() const;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

 private:
  void apply_matrix(const std::array<Amplitude, 4>& m, std::uint64_t ctrl_mask,
                    std::uint64_t ctrl_value, int target);
  void apply_flip(std::uint64_t ctrl_mask, std::uint64_t ctrl_value, int target);
  void apply_phase(std::uint64_t ctrl_mask, std::uint64_t ctrl_value, int target, Amplitude phase);
  void apply_swap(int a, int b);

  int num_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

/// Row-major 2x2 matrix of a single-qubit kind, or of the target action of
/// CX/CZ/CRx/MCT/MCZ.
std::array<Amplitude, 4> target_matrix(const Gate& gate);

/// Basis index encoded by the circuit's per-qubit initial states.
std::uint64_t initial_index(const Circuit& circuit);

/// Runs from the circuit's initial state.
Statevector run(const Circuit& circuit);
Statevector run(const Circuit& circuit, std::uint64_t basis_index);
Statevector run(const Circuit& circuit, Statevector initial);

/// Marginal distribution over `subset`; character j of each key is the
/// value of qubit subset[j]. Entries below 1e-15 are dropped.
std::map<std::string, double> probabilities(const Statevector& state, std::span<const int> subset);

/// Data bitstrings whose phase the oracle flips. Each data basis state is
/// prepared with the circuit's initial ancilla values and the output in
/// |->, and the overlap with the input is compared against a reference run
/// with the output in |+> so a global phase from lowering cancels. Throws
/// AncillaLeak when any run leaves the ancillas disturbed beyond 1e-9.
std::set<std::string> phase_pattern(const Circuit& oracle, const QubitLayout& layout);

/// 2^q x 2^q matrix, column j the image of basis state j. Width <= 12.
Eigen::MatrixXcd unitary_of(const Circuit& circuit);

/// Largest entrywise deviation after aligning the phase of `b` to `a` at
/// the largest-magnitude entry of `a`.
double distance_up_to_global_phase(std::span<const Amplitude> a, std::span<const Amplitude> b);
double distance_up_to_global_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Moves a logical state onto `num_physical` qubits, logical i at
/// physical placement[i]; unplaced physical qubits are |0>.
Statevector embed(const Statevector& logical, std::span<const int> placement, int num_physical);

/// Inverse of embed. Throws std::invalid_argument if any unplaced physical
/// qubit carries more than 1e-9 probability of being |1>.
Statevector extract(const Statevector& physical, std::span<const int> placement);

/// Bits of `value` as a string, character j = bit j.
std::string bitstring(std::uint64_t value, int width);

}  // namespace gkc::sim
