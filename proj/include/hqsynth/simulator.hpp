// Copyright 2026 The hqsynth Authors
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

#include <span>
#include <vector>

#include "hqsynth/circuit.hpp"

namespace hqs {

/// Amplitudes of an n-qubit state; qubit 0 is the most significant bit of
/// the index.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int n_qubits);
  /// Throws ShapeError unless the length is 2^n_qubits.
  StateVector(int n_qubits, std::vector<Complex> amplitudes);
  static StateVector basis(int n_qubits, std::size_t index);

  int n_qubits() const noexcept { return n_qubits_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  double norm() const;

 private:
  int n_qubits_;
  std::vector<Complex> amps_;
};

/// In-place stride application. Throws PreconditionError when a qubit
/// index is out of range.
void apply_gate(StateVector& s, const Gate& g);
/// Applies every gate, then the global phase.
void apply_circuit(StateVector& s, const QuantumCircuit& c);

inline constexpr int kMaxMatrixQubits = 10;

/// Column j is the circuit applied to basis state j, times e^{i phase}.
/// Throws SizeError above max_qubits. threads > 1 splits the columns.
ComplexMatrix circuit_to_matrix(const QuantumCircuit& c, int max_qubits = kMaxMatrixQubits,
                                int threads = 1);

struct VerificationResult {
  bool ok = false;
  double residual = 0.0;
};

/// residual = frobenius_distance(circuit_to_matrix(c), u). Throws
/// ShapeError when dimensions differ.
VerificationResult verify_synthesis(const ComplexMatrix& u, const QuantumCircuit& c, double tol,
                                    int max_qubits = kMaxMatrixQubits, int threads = 1);

}  // namespace hqs
