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

// Unitary synthesis from the Householder factorization
//
//   U = H_1 H_2 ... H_{N-1} D,     H_i = I - 2 w_i w_i^H = P_i D_G P_i^H,
//
// where D holds the phases of the diagonal triangular factor, D_G is
// diag(-1, 1, ..., 1) and P_i prepares w_i from |0...0>. Reflector i has
// i - 1 leading zeros, so P_i = X^{(n-k_i)} (x) (D_i Y_i) with
// k_i = ceil(log2(N - i + 1)) qubits doing the actual work.
//
// Gate order (first applied first): D, then H_{N-1}, ..., H_1, each as
//
//   X_i, D_i^*, Y_i^H, D_G, Y_i, D_i, X_i.
//
// With merging on, D_i and D_{i-1}^* commute past the X layers between
// them and become one diagonal on k_{i-1} qubits, and D_{N-1}^* folds into D.
// X cancellation then leaves only the X gates on qubits that change role at
// a width transition.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hqsynth/circuit.hpp"
#include "hqsynth/householder.hpp"
#include "hqsynth/multiplexor.hpp"

namespace hqs {

struct SynthesisOptions {
  int block_size = 32;   // nb
  int crossover = 128;   // nx
  int threads = 1;       // trailing update and verification columns
  bool merge_diagonals = true;
  bool cancel_x_layers = true;
  bool verify = false;
  double tolerance = 1e-10;  // Frobenius residual bound, must be > 0
  int max_verify_qubits = 7; // raise to force verification of wider circuits
  double prune_tol = 0.0;    // multiplexor pruning, 0 keeps every rotation
};

struct PhaseTimes {
  double factorize_ms = 0.0;
  double synthesize_ms = 0.0;
  double verify_ms = 0.0;
};

struct SynthesisReport {
  int n_qubits = 0;
  std::size_t blocks = 0;
  GateCounts counts;
  GateCounts predicted;
  FlopCounter flops;
  PhaseTimes times;
  std::optional<double> residual;  // set iff verification ran
};

/// {n_qubits, counts, predicted, flops, times_ms, residual}.
std::string to_json(const SynthesisReport& r);
std::string to_json(const GateCounts& c);

struct SynthesisResult {
  QuantumCircuit circuit;
  SynthesisReport report;
};

/// Throws NotUnitaryError for non-unitary input, SizeError unless the
/// dimension is 2^n with 1 <= n <= 14 (or when verification is requested
/// above max_verify_qubits), and VerificationError when the residual
/// exceeds opts.tolerance.
SynthesisResult synthesize_unitary(const ComplexMatrix& u, const SynthesisOptions& opts = {});

/// Fills report.residual and report.times.verify_ms. Returns whether the
/// residual is within opts.tolerance.
bool attach_verification(const ComplexMatrix& u, const QuantumCircuit& c,
                         const SynthesisOptions& opts, SynthesisReport& report);

/// diag(-1, 1, ..., 1) on n qubits, global phase included.
QuantumCircuit synthesize_grover_diagonal(int n_qubits);

struct ReflectorBlock {
  std::size_t index = 0;  // i, 1-based; the reflector is H_i
  std::vector<Complex> u; // unit vector, i - 1 leading zeros
  int k = 0;
  PaddedPreparation prep;
};

/// Block i built from reflector i of the factorization.
ReflectorBlock make_reflector_block(const UnitaryFactorization& f, std::size_t index,
                                    double prune_tol = 0.0);

/// Lays out D followed by the blocks (given in emission order, i.e.
/// decreasing index), merging adjacent diagonals when `merge` is set.
QuantumCircuit merge_adjacent_diagonals(const std::vector<ReflectorBlock>& blocks,
                                        const DiagonalPhases& final_d, bool merge = true,
                                        double prune_tol = 0.0);

/// Removes pairs of X gates on one qubit with no other gate on that qubit
/// between them.
QuantumCircuit cancel_x_layers(const QuantumCircuit& c);

/// Leading-order counts 2 * 4^n CNOTs and 2 * 4^n rotations.
GateCounts predicted_gate_counts(int n_qubits);

}  // namespace hqs
