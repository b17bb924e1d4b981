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

#include "hqsynth/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "hqsynth/errors.hpp"

namespace hqs {
namespace {

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    throw PreconditionError("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(n) + " qubits");
  }
}

// Bit position of qubit q in an amplitude index.
std::size_t mask_of(int q, int n) { return std::size_t{1} << (n - 1 - q); }

void apply_one(std::span<Complex> a, std::size_t mask, const Matrix2& m) {
  const std::size_t len = a.size();
  for (std::size_t base = 0; base < len; base += 2 * mask) {
    for (std::size_t i = base; i < base + mask; ++i) {
      const Complex x0 = a[i];
      const Complex x1 = a[i + mask];
      a[i] = m[0] * x0 + m[1] * x1;
      a[i + mask] = m[2] * x0 + m[3] * x1;
    }
  }
}

void apply_diag(std::span<Complex> a, std::size_t mask, Complex d0, Complex d1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= (i & mask) ? d1 : d0;
}

void apply_to(std::span<Complex> a, int n, const Gate& g) {
  check_qubit(g.target, n);
  const std::size_t t = mask_of(g.target, n);
  switch (g.kind) {
    case GateKind::X:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(i & t)) std::swap(a[i], a[i | t]);
      }
      return;
    case GateKind::CNOT: {
      check_qubit(g.control, n);
      if (g.control == g.target) throw PreconditionError("CNOT control equals target");
      const std::size_t c = mask_of(g.control, n);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & c) && !(i & t)) std::swap(a[i], a[i | t]);
      }
      return;
    }
    case GateKind::RZ:
    case GateKind::PHASE: {
      const auto m = single_qubit_matrix(g);
      apply_diag(a, t, m[0], m[3]);
      return;
    }
    case GateKind::RX:
    case GateKind::RY:
      apply_one(a, t, single_qubit_matrix(g));
      return;
  }
}

void run(std::span<Complex> a, const QuantumCircuit& c) {
  for (const auto& g : c.gates()) apply_to(a, c.n_qubits(), g);
  if (c.global_phase() != 0.0) {
    const Complex p = std::polar(1.0, c.global_phase());
    for (auto& x : a) x *= p;
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits), amps_(pow2(n_qubits)) {
  if (n_qubits < 1) throw SizeError("a state needs at least one qubit");
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 1 || amps_.size() != pow2(n_qubits)) {
    throw ShapeError("state of " + std::to_string(n_qubits) + " qubits needs 2^n amplitudes");
  }
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
  StateVector s(n_qubits);
  if (index >= s.amps_.size()) throw PreconditionError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& x : amps_) s += std::norm(x);
  return std::sqrt(s);
}

void apply_gate(StateVector& s, const Gate& g) { apply_to(s.amplitudes(), s.n_qubits(), g); }

void apply_circuit(StateVector& s, const QuantumCircuit& c) {
  if (c.n_qubits() != s.n_qubits()) throw ShapeError("circuit and state widths differ");
  run(s.amplitudes(), c);
}

ComplexMatrix circuit_to_matrix(const QuantumCircuit& c, int max_qubits, int threads) {
  const int n = c.n_qubits();
  if (n > max_qubits) {
    throw SizeError("circuit_to_matrix: " + std::to_string(n) + " qubits exceeds the guard of " +
                    std::to_string(max_qubits));
  }
  const std::size_t dim = pow2(n);
  ComplexMatrix m(dim);
  auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t j = first; j < last; ++j) {
      auto col = m.column(j);
      col[j] = 1.0;
      run(col, c);
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, dim);
  if (workers == 1) {
    work(0, dim);
    return m;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (dim + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = w * chunk;
      const std::size_t last = std::min(dim, first + chunk);
      if (first < last) pool.emplace_back(work, first, last);
    }
  }
  return m;
}

VerificationResult verify_synthesis(const ComplexMatrix& u, const QuantumCircuit& c, double tol,
                                    int max_qubits, int threads) {
  if (u.dim() != pow2(c.n_qubits())) {
    throw ShapeError("matrix of dimension " + std::to_string(u.dim()) +
                     " does not match a circuit on " + std::to_string(c.n_qubits()) + " qubits");
  }
  const double r = frobenius_distance(circuit_to_matrix(c, max_qubits, threads), u);
  return {r <= tol, r};
}

}  // namespace hqs
