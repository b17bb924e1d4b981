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

// Lowering of uniformly controlled rotations, diagonal operators and
// state preparations to RY/RZ/CNOT/X.
//
// A multiplexor with c controls is lowered to the Gray-code cascade
//
//   R(t'_0) CX R(t'_1) CX ... R(t'_{L-1}) CX,      L = 2^c,
//
// where the j-th CNOT is controlled by the bit that changes between the
// Gray codes g(j) and g(j+1 mod L). For control value x the target sees
// sum_j (-1)^{popcount(x & g(j))} t'_j, so the circuit angles are a scaled
// Walsh-Hadamard transform of the multiplexor angles, read in Gray order.

#pragma once

#include <span>
#include <vector>

#include "hqsynth/circuit.hpp"

namespace hqs {

enum class RotationAxis { Y, Z };

struct RotationMultiplexor {
  RotationAxis axis = RotationAxis::Y;
  int target = 0;
  /// controls[0] is the most significant bit of the angle index.
  std::vector<int> controls;
  std::vector<double> angles;  // 2^controls.size()
};

/// diag(e^{i phases[j]}) on n_qubits qubits.
struct DiagonalPhases {
  int n_qubits = 0;
  std::vector<double> phases;

  DiagonalPhases() = default;
  /// Throws ShapeError unless phases.size() == 2^n_qubits.
  DiagonalPhases(int n_qubits, std::vector<double> phases);
  static DiagonalPhases zeros(int n_qubits);
};

/// Multiplexor angles -> cascade angles. Throws ShapeError unless the
/// length is a power of two.
std::vector<double> multiplexor_angles_to_circuit_angles(std::span<const double> angles);
/// Inverse of the map above.
std::vector<double> circuit_angles_to_multiplexor_angles(std::span<const double> circuit_angles);

/// Exactly 2^c rotations and 2^c CNOTs (one rotation and no CNOT for
/// c = 0). n_qubits = 0 sizes the circuit to the largest index used.
QuantumCircuit decompose_rotation_multiplexor(const RotationMultiplexor& m, int n_qubits = 0);

/// Appends the cascade to `out`. When every angle is exactly zero (or at
/// most prune_tol in magnitude) nothing is emitted; with prune_tol > 0,
/// individual cascade rotations at most prune_tol are dropped as well.
void append_rotation_multiplexor(QuantumCircuit& out, const RotationMultiplexor& m,
                                 double prune_tol = 0.0);

/// Exact circuit for the diagonal, global phase included. At most
/// 2^n - 2 CNOTs and 2^n - 1 rotations; all-zero phases give an empty
/// circuit.
QuantumCircuit synthesize_diagonal(const DiagonalPhases& d, double prune_tol = 0.0);

/// Appends the diagonal acting on qubits offset .. offset + d.n_qubits - 1.
void append_diagonal(QuantumCircuit& out, const DiagonalPhases& d, int offset,
                     double prune_tol = 0.0);

/// RY cascade mapping |0...0> to the nonnegative unit vector `amplitudes`
/// (length 2^k). Qubit 0 is rotated first, qubit k-1 last with k-1
/// controls. Throws PreconditionError for negative entries or a norm
/// off by more than 1e-10.
QuantumCircuit prepare_real_state(std::span<const double> amplitudes, double prune_tol = 0.0);

struct StatePreparation {
  QuantumCircuit y;  // real-amplitude part
  DiagonalPhases d;  // applied after y
};

/// v = diag(e^{i d}) * Y |0...0>, with d_j = arg(v_j). Throws
/// PreconditionError for a vector whose norm is not 1 within 1e-10.
StatePreparation prepare_state(std::span<const Complex> v, double prune_tol = 0.0);

struct PaddedPreparation {
  int n_qubits = 0;
  int k = 0;                 // qubits carrying the nonzero tail
  std::vector<Gate> x_layer; // X on qubits 0 .. n-k-1
  QuantumCircuit y{1};       // on k qubits, to be placed at offset n-k
  DiagonalPhases d;          // on the same k qubits
};

/// Entries of u with index < 2^n - 2^k must vanish (|u_j| <= 1e-12,
/// ShapeError otherwise). Then (X layer (x) I) (I (x) D Y) |0>^n = u.
PaddedPreparation padded_prepare(std::span<const Complex> u, int k, double prune_tol = 0.0);
/// Same, with the smallest k whose prefix is zero up to 1e-14.
PaddedPreparation padded_prepare(std::span<const Complex> u, double prune_tol = 0.0);

}  // namespace hqs
