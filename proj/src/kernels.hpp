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

// Internal dense kernels. Complex products are written out in real
// arithmetic: std::complex multiplication goes through the NaN-recovering
// library path under strict IEEE semantics and does not vectorize.

#pragma once

#include <cstddef>

#include "hqsynth/linalg.hpp"

namespace hqs::detail {

/// Non-owning column-major window into a larger matrix.
struct MatrixView {
  Complex* data = nullptr;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t ld = 0;

  Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data[c * ld + r];
  }
  Complex* col(std::size_t c) const noexcept { return data + c * ld; }

  MatrixView block(std::size_t r0, std::size_t c0, std::size_t nr,
                   std::size_t nc) const noexcept {
    return {data + c0 * ld + r0, nr, nc, ld};
  }
};

inline MatrixView view_of(ComplexMatrix& m) noexcept {
  return {m.data(), m.dim(), m.dim(), m.dim()};
}

inline Complex mul(Complex a, Complex b) noexcept {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

/// conj(a) * b
inline Complex conj_mul(Complex a, Complex b) noexcept {
  return {a.real() * b.real() + a.imag() * b.imag(),
          a.real() * b.imag() - a.imag() * b.real()};
}

inline double abs2(Complex z) noexcept {
  return z.real() * z.real() + z.imag() * z.imag();
}

/// y[0:n) -= x[0:n) * alpha
void axpy_sub(std::size_t n, Complex alpha, const Complex* x, Complex* y) noexcept;

/// sum_i conj(x[i]) * y[i]
Complex dot_conj(std::size_t n, const Complex* x, const Complex* y) noexcept;

/// c -= a * b for an (m x k) a and (k x n) b. Columns of c are split across
/// `threads` workers; every entry is accumulated in the same order
/// regardless of the thread count.
void gemm_sub(MatrixView a, MatrixView b, MatrixView c, int threads = 1);

}  // namespace hqs::detail
