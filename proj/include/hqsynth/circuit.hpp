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

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hqsynth/linalg.hpp"

namespace hqs {

/// Gate kinds. Rotations follow R_G(a) = cos(a/2) I - i sin(a/2) G, so
/// RZ(a) = diag(e^{-ia/2}, e^{ia/2}); PHASE(a) = diag(1, e^{ia}).
enum class GateKind : std::uint8_t { RX, RY, RZ, PHASE, X, CNOT };

std::string_view to_string(GateKind kind) noexcept;

/// Qubit 0 is the most significant bit of a basis-state index.
struct Gate {
  GateKind kind = GateKind::X;
  std::int32_t target = 0;
  std::int32_t control = -1;  // CNOT only
  double angle = 0.0;         // RX/RY/RZ/PHASE only

  static Gate rx(int q, double a) { return {GateKind::RX, q, -1, a}; }
  static Gate ry(int q, double a) { return {GateKind::RY, q, -1, a}; }
  static Gate rz(int q, double a) { return {GateKind::RZ, q, -1, a}; }
  static Gate phase(int q, double a) { return {GateKind::PHASE, q, -1, a}; }
  static Gate x(int q) { return {GateKind::X, q, -1, 0.0}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, target, control, 0.0}; }

  bool is_rotation() const noexcept {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::PHASE;
  }
  bool operator==(const Gate&) const = default;
};

using Matrix2 = std::array<Complex, 4>;  // row-major {m00, m01, m10, m11}

/// The 2x2 matrix of a single-qubit gate. Throws PreconditionError for CNOT.
Matrix2 single_qubit_matrix(const Gate& g);

struct GateCounts {
  std::uint64_t cnot = 0;
  std::uint64_t rotation = 0;  // RX + RY + RZ + PHASE
  std::uint64_t x = 0;
  std::uint64_t total = 0;

  bool operator==(const GateCounts&) const = default;
};

/// Ordered gate list; gates()[0] is applied first. Denotes the unitary
///   e^{i global_phase} * G_last * ... * G_first.
class QuantumCircuit {
 public:
  explicit QuantumCircuit(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  double global_phase() const noexcept { return global_phase_; }
  bool empty() const noexcept { return gates_.empty(); }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Validates qubit indices (in range, control != target).
  void append(const Gate& g);
  /// Appends every gate of `other` with its qubits shifted by `offset`,
  /// and accumulates its global phase.
  void append(const QuantumCircuit& other, int offset = 0);
  void add_global_phase(double phi) noexcept { global_phase_ += phi; }
  void set_global_phase(double phi) noexcept { global_phase_ = phi; }
  /// Grows capacity geometrically, so repeated calls while appending stay
  /// amortized O(1) per gate.
  void reserve(std::size_t n) {
    if (n > gates_.capacity()) gates_.reserve(std::max(n, 2 * gates_.capacity()));
  }

  /// Replaces the gate list; used by rewriting passes.
  void assign_gates(std::vector<Gate> gates);

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
  double global_phase_ = 0.0;
};

GateCounts gate_counts(const QuantumCircuit& c);
GateCounts gate_counts(std::span<const Gate> gates);

/// Adjoint circuit: reversed order, rotation angles negated, phase negated.
QuantumCircuit inverse(const QuantumCircuit& c);

/// `c` widened to n_qubits with its qubits shifted by offset.
QuantumCircuit embed(const QuantumCircuit& c, int n_qubits, int offset);

struct XzxAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double phase = 0.0;
};

/// u = e^{i phase} RX(alpha) RZ(beta) RX(gamma), angles in (-2pi, 2pi].
/// Throws NotUnitaryError when u is not unitary within 1e-10.
XzxAngles one_qubit_xzx(const Matrix2& u);

}  // namespace hqs
