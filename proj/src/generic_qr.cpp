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

// Textbook Householder QR: each step is a matrix-vector product w = B^H u
// followed by the rank-one update B -= tau u w^H, about 4 (N-k)^2 complex
// flops per step and (4/3) N^3 in total.

#include <cmath>

#include "hqsynth/errors.hpp"
#include "hqsynth/householder.hpp"
#include "kernels.hpp"

namespace hqs {

GenericQr factorize_generic_qr(ComplexMatrix a, FlopCounter& counter) {
  if (a.empty()) throw SizeError("factorize_generic_qr: empty matrix");
  const std::size_t n = a.dim();
  std::vector<double> taus(n - 1, 0.0);

  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t m = n - k;
    Complex* b = a.column(k).data() + k;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm2 += detail::abs2(b[i]);
    counter.add(m, m - 1);
    if (norm2 == 0.0) continue;  // H = I

    const double norm = std::sqrt(norm2);
    const Complex phase = std::polar(1.0, safe_arg(b[0]));
    const Complex u1 = b[0] + phase * norm;
    const Complex inv_u1 = 1.0 / u1;
    for (std::size_t i = 1; i < m; ++i) b[i] = detail::mul(b[i], inv_u1);
    counter.add(m, 1);
    const double tau = 1.0 + std::abs(b[0]) / norm;
    b[0] = -phase * norm;
    taus[k] = tau;

    for (std::size_t j = k + 1; j < n; ++j) {
      Complex* aj = a.column(j).data() + k;
      const Complex w = aj[0] + detail::dot_conj(m - 1, b + 1, aj + 1);
      const Complex t = w * tau;
      aj[0] -= t;
      detail::axpy_sub(m - 1, t, b + 1, aj + 1);
    }
    // per column: (m-1) mul + (m-1) add for w, 1 mul for tau*w,
    // (m-1) mul + m add for the update
    counter.add((n - k - 1) * (2 * m - 1), (n - k - 1) * (2 * m - 1));
  }
  return {std::move(a), std::move(taus)};
}

GenericQr factorize_generic_qr(ComplexMatrix a) {
  FlopCounter counter;
  return factorize_generic_qr(std::move(a), counter);
}

ComplexMatrix GenericQr::q() const {
  const std::size_t n = dim();
  ComplexMatrix q = ComplexMatrix::identity(n);
  // H_k only touches rows k.. and, applied right to left onto I, only
  // columns k.. are non-trivial at that point.
  for (std::size_t k = n - 1; k-- > 0;) {
    const double tau = taus[k];
    if (tau == 0.0) continue;
    const Complex* u = packed.column(k).data() + k;
    const std::size_t m = n - k;
    for (std::size_t j = k; j < n; ++j) {
      Complex* qj = q.column(j).data() + k;
      const Complex w = qj[0] + detail::dot_conj(m - 1, u + 1, qj + 1);
      const Complex t = w * tau;
      qj[0] -= t;
      detail::axpy_sub(m - 1, t, u + 1, qj + 1);
    }
  }
  return q;
}

ComplexMatrix GenericQr::r() const {
  const std::size_t n = dim();
  ComplexMatrix r(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) r(i, j) = packed(i, j);
  }
  return r;
}

}  // namespace hqs
