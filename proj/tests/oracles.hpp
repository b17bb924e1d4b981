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

// Slow, direct reference implementations. They share no code with the
// library beyond the matrix container and gate definitions.

#pragma once

#include <cmath>
#include <vector>

#include "hqsynth/circuit.hpp"
#include "hqsynth/linalg.hpp"
#include "hqsynth/multiplexor.hpp"

namespace oracle {

using hqs::Complex;
using hqs::ComplexMatrix;

inline double arg0(Complex z) { return z == Complex{} ? 0.0 : std::arg(z); }

// Right-looking Householder QR with the full update H A at every step.
struct SequentialQr {
  std::vector<std::vector<Complex>> u;  // u[k] has length N - k, u[k][0] = 1
  std::vector<double> tau;
  std::vector<Complex> diag;            // R_kk
  std::vector<std::vector<Complex>> row; // row k of the trailing block before H_k, cols k+1..
};

inline SequentialQr sequential_qr(ComplexMatrix a) {
  const std::size_t n = a.dim();
  SequentialQr out;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::vector<Complex> r;
    for (std::size_t j = k + 1; j < n; ++j) r.push_back(a(k, j));
    out.row.push_back(r);

    double norm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) norm2 += std::norm(a(i, k));
    const double norm = std::sqrt(norm2);
    const Complex e = std::polar(1.0, arg0(a(k, k)));
    std::vector<Complex> v(n - k);
    for (std::size_t i = k; i < n; ++i) v[i - k] = a(i, k);
    v[0] += e * norm;
    double vnorm2 = 0.0;
    for (const auto& x : v) vnorm2 += std::norm(x);
    const Complex v0 = v[0];
    for (auto& x : v) x /= v0;
    const double tau = 2.0 / vnorm2 * std::norm(v0);
    // A <- (I - tau v v^H) A on rows k.., all columns k..
    for (std::size_t j = k; j < n; ++j) {
      Complex w{};
      for (std::size_t i = k; i < n; ++i) w += std::conj(v[i - k]) * a(i, j);
      for (std::size_t i = k; i < n; ++i) a(i, j) -= tau * v[i - k] * w;
    }
    out.u.push_back(v);
    out.tau.push_back(tau);
    out.diag.push_back(a(k, k));
  }
  out.row.push_back({});
  out.diag.push_back(a(n - 1, n - 1));
  return out;
}

inline int bit(std::size_t index, int q, int n) { return static_cast<int>((index >> (n - 1 - q)) & 1U); }

// Full 2^n x 2^n matrix of one gate, entry by entry.
inline ComplexMatrix gate_matrix(const hqs::Gate& g, int n) {
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim);
  const std::size_t tmask = std::size_t{1} << (n - 1 - g.target);
  if (g.kind == hqs::GateKind::CNOT) {
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t r = bit(c, g.control, n) ? (c ^ tmask) : c;
      m(r, c) = 1.0;
    }
    return m;
  }
  const auto u = hqs::single_qubit_matrix(g);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) {
      if ((r & ~tmask) != (c & ~tmask)) continue;
      m(r, c) = u[2 * static_cast<std::size_t>(bit(r, g.target, n)) +
                  static_cast<std::size_t>(bit(c, g.target, n))];
    }
  }
  return m;
}

// Product of gate matrices, last gate leftmost, times the global phase.
inline ComplexMatrix circuit_matrix(const hqs::QuantumCircuit& c) {
  const int n = c.n_qubits();
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << n);
  for (const auto& g : c.gates()) m = gate_matrix(g, n) * m;
  const Complex p = std::polar(1.0, c.global_phase());
  ComplexMatrix out(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j)
    for (std::size_t i = 0; i < m.dim(); ++i) out(i, j) = p * m(i, j);
  return out;
}

// Block-diagonal operator of a rotation multiplexor on n qubits.
inline ComplexMatrix multiplexor_matrix(const hqs::RotationMultiplexor& mx, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t tmask = std::size_t{1} << (n - 1 - mx.target);
  ComplexMatrix m(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t x = 0;
    for (int q : mx.controls) x = (x << 1) | static_cast<std::size_t>(bit(c, q, n));
    const double a = mx.angles[x];
    const hqs::Gate g = mx.axis == hqs::RotationAxis::Y ? hqs::Gate::ry(0, a) : hqs::Gate::rz(0, a);
    const auto u = hqs::single_qubit_matrix(g);
    for (std::size_t r : {c & ~tmask, c | tmask}) {
      m(r, c) = u[2 * static_cast<std::size_t>(bit(r, mx.target, n)) +
                  static_cast<std::size_t>(bit(c, mx.target, n))];
    }
  }
  return m;
}

inline ComplexMatrix diagonal_matrix(const std::vector<double>& phases) {
  ComplexMatrix m(phases.size());
  for (std::size_t j = 0; j < phases.size(); ++j) m(j, j) = std::polar(1.0, phases[j]);
  return m;
}

}  // namespace oracle
