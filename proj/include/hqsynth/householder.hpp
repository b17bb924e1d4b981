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

// Householder QR of unitary matrices.
//
// For a unitary A every reflector is built from a unit column b:
//
//   theta = arg(b_1),  u = b + e^{i theta} e_1,  H b = -e^{i theta} e_1.
//
// Scaling u by 1 / (e^{i theta} (1 + |b_1|)) gives u_1 = 1 and
// tau = 1 + |b_1|. Orthonormality of the rows and columns of A means the
// trailing update collapses to A(2:,2:) -= u(2:) * r(2:), where r is the
// current first row, so no matrix-vector product is needed and the
// factorization costs about (2/3) N^3 complex flops instead of (4/3) N^3.
//
// Packed layout (column-major, N x N):
//   strictly lower part of column k : u_k(k+1:N), with u_k(k) = 1 implicit
//   diagonal entry (k, k)           : R_kk = e^{i phases[k]}
//   strictly upper part of row k    : r_k, the row that multiplied u_k in
//                                     the trailing update
//   taus[k]                         : 1 + |b_1| for reflector k (N - 1 of them)

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hqsynth/linalg.hpp"

namespace hqs {

/// Complex multiply and add counts. One complex multiply (or division) is
/// one flop; one complex add or subtract is one flop.
struct FlopCounter {
  std::uint64_t complex_mul = 0;
  std::uint64_t complex_add = 0;

  std::uint64_t total() const noexcept { return complex_mul + complex_add; }
  void add(std::uint64_t muls, std::uint64_t adds) noexcept {
    complex_mul += muls;
    complex_add += adds;
  }
};

struct UnitaryFactorization {
  ComplexMatrix packed;
  std::vector<double> taus;    // length N - 1
  std::vector<double> phases;  // length N, R_kk = e^{i phases[k]}

  std::size_t dim() const noexcept { return packed.dim(); }

  /// Full-length Householder vector k with u(k) = 1 and zeros above.
  std::vector<Complex> householder_vector(std::size_t k) const;
};

struct Reflector {
  std::vector<Complex> u;  // u[0] == 1
  double tau = 0.0;
  double theta = 0.0;
};

/// Reflector for a unit column b. Throws NumericalError when |‖b‖ - 1|
/// exceeds unit_tol.
Reflector reflector_from_column(std::span<const Complex> b,
                                FlopCounter& counter,
                                double unit_tol = 1e-10);

struct BlockingParams {
  int block_size = 32;  // nb
  int crossover = 128;  // nx: trailing blocks of order <= nx use the unblocked kernel
  int threads = 1;      // trailing matrix-matrix update only
  /// Re-check unitarity of each trailing block at panel boundaries.
  /// O(N^3) per check, for debugging only.
  bool check_trailing_unitarity = false;
};

/// Row/column-update ("one row and one column per step") unblocked kernel.
/// Throws NotUnitaryError when a column of the trailing block is not unit
/// norm within the tolerance.
UnitaryFactorization factorize_unblocked(ComplexMatrix a, FlopCounter& counter);
UnitaryFactorization factorize_unblocked(ComplexMatrix a);

/// Blocked factorization: unblocked panel kernel, triangular T1/T2 panel
/// updates, and a matrix-matrix trailing update.
UnitaryFactorization factorize_blocked(ComplexMatrix a,
                                       const BlockingParams& params,
                                       FlopCounter& counter);
UnitaryFactorization factorize_blocked(ComplexMatrix a,
                                       const BlockingParams& params = {});

/// Triangular panel factors.
///   A21 <- A21 * t1   turns a raw column block into Householder vectors;
///   A12 <- t2 * A12   turns a raw row block into its updated rows.
struct PanelTriangles {
  ComplexMatrix t1;  // upper triangular
  ComplexMatrix t2;  // unit lower triangular
};

/// Computes t1/t2 from an nb x nb diagonal block that has already been
/// factorized in place by the unblocked kernel. panel(r, c) addresses the
/// block; taus are that block's reflector taus.
PanelTriangles compute_panel_triangles(const ComplexMatrix& panel,
                                       std::span<const double> taus);

/// H_1 H_2 ... H_{N-1} diag(e^{i phases}). O(N^3); used for verification.
ComplexMatrix reconstruct_unitary(const UnitaryFactorization& f);

/// H_{N-1} ... H_1 a, i.e. the triangular factor Q^H a.
ComplexMatrix apply_reflectors_adjoint(const UnitaryFactorization& f,
                                       ComplexMatrix a);

/// Standard Householder QR of an arbitrary square matrix (baseline).
/// Same packed layout, except that the upper triangle holds R and
/// the reflector for a zero column has tau = 0.
struct GenericQr {
  ComplexMatrix packed;
  std::vector<double> taus;  // length N - 1

  std::size_t dim() const noexcept { return packed.dim(); }
  ComplexMatrix q() const;
  ComplexMatrix r() const;
};

GenericQr factorize_generic_qr(ComplexMatrix a, FlopCounter& counter);
GenericQr factorize_generic_qr(ComplexMatrix a);

}  // namespace hqs
