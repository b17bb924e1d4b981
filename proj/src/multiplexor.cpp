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

#include "hqsynth/multiplexor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "hqsynth/errors.hpp"

namespace hqs {
namespace {

constexpr double kUnitNormTol = 1e-10;
constexpr double kPrefixTol = 1e-12;
constexpr double kZeroAmplitude = 1e-14;

std::size_t gray(std::size_t j) { return j ^ (j >> 1); }

// In-place unnormalized Walsh-Hadamard transform.
void fwht(std::vector<double>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = v[j];
        const double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

void require_power_of_two(std::size_t len) {
  if (len == 0 || !std::has_single_bit(len)) {
    throw ShapeError("angle vector length " + std::to_string(len) + " is not a power of two");
  }
}

void validate(const RotationMultiplexor& m) {
  const std::size_t c = m.controls.size();
  if (c >= 63 || m.angles.size() != (std::size_t{1} << c)) {
    throw ShapeError("multiplexor with " + std::to_string(c) + " controls needs 2^" +
                     std::to_string(c) + " angles, got " + std::to_string(m.angles.size()));
  }
  if (std::find(m.controls.begin(), m.controls.end(), m.target) != m.controls.end()) {
    throw PreconditionError("multiplexor target is also a control");
  }
  std::vector<int> sorted = m.controls;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("multiplexor controls repeat");
  }
}

Gate rotation(RotationAxis axis, int q, double a) {
  return axis == RotationAxis::Y ? Gate::ry(q, a) : Gate::rz(q, a);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

DiagonalPhases::DiagonalPhases(int n, std::vector<double> p) : n_qubits(n), phases(std::move(p)) {
  if (n < 0 || n > 30 || phases.size() != (std::size_t{1} << n)) {
    throw ShapeError("diagonal on " + std::to_string(n) + " qubits needs 2^n phases, got " +
                     std::to_string(phases.size()));
  }
}

DiagonalPhases DiagonalPhases::zeros(int n) {
  return DiagonalPhases(n, std::vector<double>(pow2(n), 0.0));
}

std::vector<double> multiplexor_angles_to_circuit_angles(std::span<const double> angles) {
  require_power_of_two(angles.size());
  std::vector<double> h(angles.begin(), angles.end());
  fwht(h);
  const double scale = 1.0 / static_cast<double>(angles.size());
  std::vector<double> out(angles.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = h[gray(j)] * scale;
  return out;
}

std::vector<double> circuit_angles_to_multiplexor_angles(std::span<const double> circuit_angles) {
  require_power_of_two(circuit_angles.size());
  std::vector<double> h(circuit_angles.size());
  for (std::size_t j = 0; j < h.size(); ++j) h[gray(j)] = circuit_angles[j];
  fwht(h);
  return h;
}

void append_rotation_multiplexor(QuantumCircuit& out, const RotationMultiplexor& m,
                                 double prune_tol) {
  validate(m);
  if (max_abs(m.angles) <= prune_tol) return;

  const std::size_t c = m.controls.size();
  const std::size_t len = m.angles.size();
  const auto theta = multiplexor_angles_to_circuit_angles(m.angles);
  out.reserve(out.size() + 2 * len);
  for (std::size_t j = 0; j < len; ++j) {
    if (prune_tol == 0.0 || std::abs(theta[j]) > prune_tol) {
      out.append(rotation(m.axis, m.target, theta[j]));
    }
    if (c == 0) break;
    const std::size_t changed = gray(j) ^ gray((j + 1) % len);
    const int bit = std::countr_zero(changed);
    out.append(Gate::cnot(m.controls[c - 1 - static_cast<std::size_t>(bit)], m.target));
  }
}

QuantumCircuit decompose_rotation_multiplexor(const RotationMultiplexor& m, int n_qubits) {
  validate(m);
  if (n_qubits == 0) {
    n_qubits = m.target + 1;
    for (int q : m.controls) n_qubits = std::max(n_qubits, q + 1);
  }
  QuantumCircuit out(n_qubits);
  const std::size_t len = m.angles.size();
  const auto theta = multiplexor_angles_to_circuit_angles(m.angles);
  const std::size_t c = m.controls.size();
  for (std::size_t j = 0; j < len; ++j) {
    out.append(rotation(m.axis, m.target, theta[j]));
    if (c == 0) break;
    const int bit = std::countr_zero(gray(j) ^ gray((j + 1) % len));
    out.append(Gate::cnot(m.controls[c - 1 - static_cast<std::size_t>(bit)], m.target));
  }
  return out;
}

void append_diagonal(QuantumCircuit& out, const DiagonalPhases& d, int offset, double prune_tol) {
  if (offset < 0 || offset + d.n_qubits > out.n_qubits()) {
    throw PreconditionError("diagonal does not fit the circuit");
  }
  // diag(e^{i p_{2m}}, e^{i p_{2m+1}}) = e^{i (p_{2m} + p_{2m+1}) / 2} RZ(p_{2m+1} - p_{2m}),
  // so each level peels an RZ multiplexor off the last qubit.
  std::vector<double> phases = d.phases;
  for (int level = d.n_qubits; level > 0; --level) {
    const std::size_t half = phases.size() / 2;
    RotationMultiplexor m;
    m.axis = RotationAxis::Z;
    m.target = offset + level - 1;
    m.controls.resize(static_cast<std::size_t>(level - 1));
    for (int q = 0; q + 1 < level; ++q) m.controls[static_cast<std::size_t>(q)] = offset + q;
    m.angles.resize(half);
    std::vector<double> reduced(half);
    for (std::size_t i = 0; i < half; ++i) {
      m.angles[i] = phases[2 * i + 1] - phases[2 * i];
      reduced[i] = (phases[2 * i] + phases[2 * i + 1]) / 2;
    }
    append_rotation_multiplexor(out, m, prune_tol);
    phases = std::move(reduced);
  }
  out.add_global_phase(phases[0]);
}

QuantumCircuit synthesize_diagonal(const DiagonalPhases& d, double prune_tol) {
  QuantumCircuit out(std::max(d.n_qubits, 1));
  append_diagonal(out, d, 0, prune_tol);
  return out;
}

QuantumCircuit prepare_real_state(std::span<const double> amplitudes, double prune_tol) {
  require_power_of_two(amplitudes.size());
  const int k = log2_exact(amplitudes.size());
  double norm2 = 0.0;
  for (double a : amplitudes) {
    if (!(a >= 0.0)) throw PreconditionError("prepare_real_state: negative or NaN amplitude");
    norm2 += a * a;
  }
  if (!(std::abs(std::sqrt(norm2) - 1.0) <= kUnitNormTol)) {
    throw PreconditionError("prepare_real_state: amplitudes are not a unit vector");
  }

  // levels[l][x]: norm of the block of amplitudes whose first l qubits read x.
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(k) + 1);
  levels[static_cast<std::size_t>(k)].assign(amplitudes.begin(), amplitudes.end());
  for (int l = k - 1; l >= 0; --l) {
    const auto& below = levels[static_cast<std::size_t>(l) + 1];
    auto& here = levels[static_cast<std::size_t>(l)];
    here.resize(below.size() / 2);
    for (std::size_t x = 0; x < here.size(); ++x) here[x] = std::hypot(below[2 * x], below[2 * x + 1]);
  }

  QuantumCircuit out(std::max(k, 1));
  for (int l = 0; l < k; ++l) {
    const auto& below = levels[static_cast<std::size_t>(l) + 1];
    RotationMultiplexor m;
    m.axis = RotationAxis::Y;
    m.target = l;
    for (int q = 0; q < l; ++q) m.controls.push_back(q);
    m.angles.resize(below.size() / 2);
    for (std::size_t x = 0; x < m.angles.size(); ++x) {
      m.angles[x] = 2 * std::atan2(below[2 * x + 1], below[2 * x]);
    }
    append_rotation_multiplexor(out, m, prune_tol);
  }
  return out;
}

StatePreparation prepare_state(std::span<const Complex> v, double prune_tol) {
  require_power_of_two(v.size());
  const int k = log2_exact(v.size());
  std::vector<double> magnitudes(v.size());
  std::vector<double> phases(v.size());
  double norm2 = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    magnitudes[j] = std::abs(v[j]);
    phases[j] = safe_arg(v[j]);
    norm2 += std::norm(v[j]);
  }
  if (!(std::abs(std::sqrt(norm2) - 1.0) <= kUnitNormTol)) {
    throw PreconditionError("prepare_state: vector is not a unit vector");
  }
  return {prepare_real_state(magnitudes, prune_tol), DiagonalPhases(k, std::move(phases))};
}

PaddedPreparation padded_prepare(std::span<const Complex> u, int k, double prune_tol) {
  require_power_of_two(u.size());
  const int n = log2_exact(u.size());
  if (n < 1 || k < 1 || k > n) {
    throw PreconditionError("padded_prepare: need 1 <= k <= n, got k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
  }
  const std::size_t tail = std::size_t{1} << k;
  const std::size_t prefix = u.size() - tail;
  for (std::size_t j = 0; j < prefix; ++j) {
    if (std::abs(u[j]) > kPrefixTol) {
      throw ShapeError("padded_prepare: entry " + std::to_string(j) +
                       " lies outside the last 2^" + std::to_string(k) + " entries but is nonzero");
    }
  }
  auto sp = prepare_state(u.subspan(prefix), prune_tol);
  PaddedPreparation out;
  out.n_qubits = n;
  out.k = k;
  for (int q = 0; q < n - k; ++q) out.x_layer.push_back(Gate::x(q));
  out.y = std::move(sp.y);
  out.d = std::move(sp.d);
  return out;
}

PaddedPreparation padded_prepare(std::span<const Complex> u, double prune_tol) {
  require_power_of_two(u.size());
  std::size_t first = u.size() - 1;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (std::abs(u[j]) > kZeroAmplitude) {
      first = j;
      break;
    }
  }
  const std::size_t support = u.size() - first;
  int k = 1;
  while ((std::size_t{1} << k) < support) ++k;
  return padded_prepare(u, k, prune_tol);
}

}  // namespace hqs
