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

#include "hqsynth/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hqsynth/errors.hpp"

namespace hqs {

std::string_view to_string(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::PHASE: return "phase";
    case GateKind::X: return "x";
    case GateKind::CNOT: return "cnot";
  }
  return "?";
}

Matrix2 single_qubit_matrix(const Gate& g) {
  const double c = std::cos(g.angle / 2);
  const double s = std::sin(g.angle / 2);
  switch (g.kind) {
    case GateKind::RX: return {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
    case GateKind::RY: return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
    case GateKind::RZ: return {Complex{c, -s}, Complex{}, Complex{}, Complex{c, s}};
    case GateKind::PHASE: return {Complex{1, 0}, Complex{}, Complex{}, std::polar(1.0, g.angle)};
    case GateKind::X: return {Complex{}, Complex{1, 0}, Complex{1, 0}, Complex{}};
    case GateKind::CNOT: break;
  }
  throw PreconditionError("single_qubit_matrix: CNOT is a two-qubit gate");
}

QuantumCircuit::QuantumCircuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw SizeError("a circuit needs at least one qubit");
}

void QuantumCircuit::append(const Gate& g) {
  if (g.target < 0 || g.target >= n_qubits_) {
    throw PreconditionError("gate target " + std::to_string(g.target) +
                            " out of range for " + std::to_string(n_qubits_) + " qubits");
  }
  if (g.kind == GateKind::CNOT) {
    if (g.control < 0 || g.control >= n_qubits_) {
      throw PreconditionError("CNOT control " + std::to_string(g.control) + " out of range");
    }
    if (g.control == g.target) throw PreconditionError("CNOT control equals target");
  } else if (g.control != -1) {
    throw PreconditionError("only CNOT carries a control qubit");
  }
  gates_.push_back(g);
}

void QuantumCircuit::append(const QuantumCircuit& other, int offset) {
  if (offset < 0 || other.n_qubits() + offset > n_qubits_) {
    throw PreconditionError("appended circuit does not fit at offset " + std::to_string(offset));
  }
  reserve(gates_.size() + other.size());
  for (Gate g : other.gates()) {
    g.target += offset;
    if (g.kind == GateKind::CNOT) g.control += offset;
    gates_.push_back(g);
  }
  global_phase_ += other.global_phase();
}

void QuantumCircuit::assign_gates(std::vector<Gate> gates) {
  QuantumCircuit checked(n_qubits_);
  checked.gates_.reserve(gates.size());
  for (const auto& g : gates) checked.append(g);
  gates_ = std::move(checked.gates_);
}

GateCounts gate_counts(std::span<const Gate> gates) {
  GateCounts counts;
  for (const auto& g : gates) {
    if (g.kind == GateKind::CNOT) {
      ++counts.cnot;
    } else if (g.kind == GateKind::X) {
      ++counts.x;
    } else {
      ++counts.rotation;
    }
  }
  counts.total = counts.cnot + counts.rotation + counts.x;
  return counts;
}

GateCounts gate_counts(const QuantumCircuit& c) { return gate_counts(c.gates()); }

QuantumCircuit inverse(const QuantumCircuit& c) {
  QuantumCircuit out(c.n_qubits());
  out.reserve(c.size());
  std::vector<Gate> gates(c.gates().rbegin(), c.gates().rend());
  for (auto& g : gates) {
    if (g.is_rotation()) g.angle = -g.angle;
  }
  out.assign_gates(std::move(gates));
  out.set_global_phase(-c.global_phase());
  return out;
}

QuantumCircuit embed(const QuantumCircuit& c, int n_qubits, int offset) {
  QuantumCircuit out(n_qubits);
  out.append(c, offset);
  return out;
}

namespace {

constexpr double kPi = std::numbers::pi;

// Maps an angle into (-2pi, 2pi] by multiples of 4pi, the period of a
// rotation gate, so the operator is unchanged.
double wrap_rotation_angle(double a) {
  a = std::remainder(a, 4 * kPi);  // [-2pi, 2pi]
  if (a <= -2 * kPi) a += 4 * kPi;
  return a;
}

}  // namespace

XzxAngles one_qubit_xzx(const Matrix2& u) {
  const auto [a, b, c, d] = u;
  const double defect = std::max({std::abs(std::norm(a) + std::norm(c) - 1.0),
                                  std::abs(std::norm(b) + std::norm(d) - 1.0),
                                  std::abs(std::conj(a) * b + std::conj(c) * d)});
  if (!(defect <= 1e-10)) throw NotUnitaryError("one_qubit_xzx: matrix is not unitary");

  // H u H = e^{i phase} RZ(alpha) RX(beta) RZ(gamma), and
  // RX(beta) = RZ(-pi/2) RY(beta) RZ(pi/2), so a ZYZ split of W = H u H
  // with angles (z1, y, z2) gives alpha = z1 + pi/2, beta = y,
  // gamma = z2 - pi/2.
  const Complex w00 = (a + b + c + d) / 2.0;
  const Complex w10 = (a + b - c - d) / 2.0;
  const Complex w11 = (a - b - c + d) / 2.0;
  const Complex w01 = (a - b + c - d) / 2.0;

  const double phase = safe_arg(w00 * w11 - w01 * w10) / 2;
  const Complex unphase = std::polar(1.0, -phase);
  const Complex s00 = w00 * unphase;  // e^{-i(z1+z2)/2} cos(y/2)
  const Complex s10 = w10 * unphase;  // e^{ i(z1-z2)/2} sin(y/2)

  const double y = 2 * std::atan2(std::abs(s10), std::abs(s00));
  const double sum = -2 * safe_arg(s00);
  const double diff = 2 * safe_arg(s10);
  const double z1 = (sum + diff) / 2;
  const double z2 = (sum - diff) / 2;

  if (y == 0.0) {
    // RZ(0) leaves one free angle; put the whole X rotation into alpha.
    return {wrap_rotation_angle(z1 + z2), 0.0, 0.0, phase};
  }
  return {wrap_rotation_angle(z1 + kPi / 2), wrap_rotation_angle(y),
          wrap_rotation_angle(z2 - kPi / 2), phase};
}

}  // namespace hqs
