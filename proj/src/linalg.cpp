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

#include "hqsynth/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "hqsynth/errors.hpp"
#include "hqsynth/householder.hpp"
#include "kernels.hpp"

namespace hqs {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw SizeError("matrix dimension must be at least 1");
  if (dim > (std::size_t{1} << 20)) {
    throw SizeError("matrix dimension " + std::to_string(dim) + " is too large");
  }
  data_.assign(dim * dim, Complex{});
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ShapeError("from_rows: matrix is not square");
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t r = 0; r < dim_; ++r) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("matrix product: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex* cj = c.column(j).data();
    for (std::size_t k = 0; k < n; ++k) {
      const Complex bkj = b(k, j);
      if (bkj == Complex{}) continue;
      detail::axpy_sub(n, -bkj, a.column(k).data(), cj);
    }
  }
  return c;
}

double unitarity_defect(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      Complex g = detail::dot_conj(n, m.column(i).data(), m.column(j).data());
      if (i == j) g -= 1.0;
      const double e = std::abs(g);
      if (!(e <= worst)) worst = e;  // NaN propagates
    }
  }
  return worst;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.empty()) return false;
  return unitarity_defect(m) <= tol;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("frobenius_distance: dimension mismatch");
  double sum = 0.0;
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) sum += detail::abs2(av[i] - bv[i]);
  return std::sqrt(sum);
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("max_abs_difference: dimension mismatch");
  double worst = 0.0;
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) worst = std::max(worst, std::abs(av[i] - bv[i]));
  return worst;
}

Complex RandomSource::complex_normal() {
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

double RandomSource::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

ComplexMatrix ginibre_matrix(std::size_t dim, RandomSource& rng) {
  ComplexMatrix g(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (auto& z : g.column(j)) z = rng.complex_normal();
  }
  return g;
}

ComplexMatrix haar_random_unitary(int n_qubits, RandomSource& rng) {
  if (n_qubits < 1 || n_qubits > kMaxRandomQubits) {
    throw SizeError("haar_random_unitary: n_qubits must be in [1, " +
                    std::to_string(kMaxRandomQubits) + "], got " +
                    std::to_string(n_qubits));
  }
  const std::size_t dim = pow2(n_qubits);
  GenericQr qr = factorize_generic_qr(ginibre_matrix(dim, rng));
  ComplexMatrix q = qr.q();
  // Q * diag(R_jj / |R_jj|) makes the factorization the unique one with a
  // positive diagonal in R, which is what makes Q Haar distributed.
  for (std::size_t j = 0; j < dim; ++j) {
    const Complex rjj = qr.packed(j, j);
    const double mag = std::abs(rjj);
    const Complex phase = mag > 0.0 ? rjj / mag : Complex{1.0};
    for (auto& z : q.column(j)) z = detail::mul(z, phase);
  }
  return q;
}

std::vector<Complex> haar_random_state(std::size_t length, RandomSource& rng) {
  if (length == 0) throw SizeError("haar_random_state: empty state");
  std::vector<Complex> v(length);
  double norm2 = 0.0;
  for (auto& z : v) {
    z = rng.complex_normal();
    norm2 += detail::abs2(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return v;
}

std::size_t pow2(int n) {
  if (n < 0 || n >= std::numeric_limits<std::size_t>::digits) {
    throw SizeError("qubit count " + std::to_string(n) + " out of range");
  }
  return std::size_t{1} << n;
}

int log2_exact(std::size_t dim) noexcept {
  if (dim == 0 || (dim & (dim - 1)) != 0) return -1;
  int n = 0;
  while ((std::size_t{1} << n) != dim) ++n;
  return n;
}

double safe_arg(Complex z) noexcept {
  if (z.real() == 0.0 && z.imag() == 0.0) return 0.0;
  return std::arg(z);
}

namespace detail {

void axpy_sub(std::size_t n, Complex alpha, const Complex* x, Complex* y) noexcept {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = xs[2 * i];
    const double xi = xs[2 * i + 1];
    ys[2 * i] -= xr * ar - xi * ai;
    ys[2 * i + 1] -= xr * ai + xi * ar;
  }
}

Complex dot_conj(std::size_t n, const Complex* x, const Complex* y) noexcept {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = xs[2 * i];
    const double xi = xs[2 * i + 1];
    const double yr = ys[2 * i];
    const double yi = ys[2 * i + 1];
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

namespace {

constexpr std::size_t kRowChunk = 256;

// c(:, j) -= a * b(:, j) for j in [j0, j1). Rows are processed in chunks so
// that the chunk of c(:, j) stays in L1 while the k columns of a stream by.
void gemm_sub_columns(MatrixView a, MatrixView b, MatrixView c, std::size_t j0,
                      std::size_t j1) noexcept {
  const std::size_t m = c.rows;
  const std::size_t k = a.cols;
  for (std::size_t r0 = 0; r0 < m; r0 += kRowChunk) {
    const std::size_t nr = std::min(kRowChunk, m - r0);
    for (std::size_t j = j0; j < j1; ++j) {
      double* cj = reinterpret_cast<double*>(c.col(j) + r0);
      const Complex* bj = b.col(j);
      std::size_t l = 0;
      for (; l + 2 <= k; l += 2) {
        const double b0r = bj[l].real(), b0i = bj[l].imag();
        const double b1r = bj[l + 1].real(), b1i = bj[l + 1].imag();
        const double* a0 = reinterpret_cast<const double*>(a.col(l) + r0);
        const double* a1 = reinterpret_cast<const double*>(a.col(l + 1) + r0);
        for (std::size_t i = 0; i < nr; ++i) {
          const double x0r = a0[2 * i], x0i = a0[2 * i + 1];
          const double x1r = a1[2 * i], x1i = a1[2 * i + 1];
          cj[2 * i] -= (x0r * b0r - x0i * b0i) + (x1r * b1r - x1i * b1i);
          cj[2 * i + 1] -= (x0r * b0i + x0i * b0r) + (x1r * b1i + x1i * b1r);
        }
      }
      for (; l < k; ++l) {
        axpy_sub(nr, bj[l], a.col(l) + r0, c.col(j) + r0);
      }
    }
  }
}

}  // namespace

void gemm_sub(MatrixView a, MatrixView b, MatrixView c, int threads) {
  const std::size_t n = c.cols;
  if (n == 0 || c.rows == 0 || a.cols == 0) return;
  const std::size_t workers =
      std::clamp<std::size_t>(threads > 0 ? static_cast<std::size_t>(threads) : 1, 1, n);
  if (workers == 1) {
    gemm_sub_columns(a, b, c, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  const std::size_t per = (n + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t j0 = std::min(n, w * per);
    const std::size_t j1 = std::min(n, j0 + per);
    if (j0 < j1) pool.emplace_back(gemm_sub_columns, a, b, c, j0, j1);
  }
  gemm_sub_columns(a, b, c, 0, std::min(n, per));
  for (auto& t : pool) t.join();
}

}  // namespace detail
}  // namespace hqs
