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

#include "hqsynth/householder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hqsynth/errors.hpp"
#include "kernels.hpp"

namespace hqs {
namespace {

using detail::MatrixView;

// Tolerance on |‖b‖² - 1| for the columns met during factorization and on
// the norm-preservation probe. Scales with N because the admissible input
// defect max|A^H A - I| <= 1e-10 allows ‖A^H A - I‖_2 up to N * 1e-10.
double unit_tolerance(std::size_t n) { return 1e-10 * static_cast<double>(std::max<std::size_t>(n, 1)); }

Complex dot(std::size_t n, const Complex* x, const Complex* y) noexcept {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

// Cheap unitarity screen: ‖A x‖ = ‖x‖ for a few fixed pseudo-random x.
// A non-unitary A fails it for almost every x.
void probe_norm_preservation(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  RandomSource rng(0x9e3779b97f4a7c15ULL);
  std::vector<Complex> x(n);
  std::vector<Complex> y(n);
  for (int trial = 0; trial < 2; ++trial) {
    double xnorm2 = 0.0;
    for (auto& z : x) {
      z = rng.complex_normal();
      xnorm2 += detail::abs2(z);
    }
    std::fill(y.begin(), y.end(), Complex{});
    for (std::size_t j = 0; j < n; ++j) detail::axpy_sub(n, -x[j], a.column(j).data(), y.data());
    double ynorm2 = 0.0;
    for (const auto& z : y) ynorm2 += detail::abs2(z);
    const double defect = std::abs(ynorm2 - xnorm2) / xnorm2;
    if (!(defect <= unit_tolerance(n))) {
      throw NotUnitaryError("input matrix is not unitary (norm defect " +
                            std::to_string(defect) + ")");
    }
  }
}

// Turns the already-updated column a(k:, k) of view `a` into the
// normalized Householder vector, rows k+1 .. rows-1 of the view. The rows
// below the view (if any) are normalized later by the panel triangle.
void make_reflector_in_place(MatrixView a, std::size_t k, double* tau,
                             FlopCounter& counter) {
  Complex* col = a.col(k);
  const Complex b1 = col[k];
  const double mag = std::abs(b1);
  const double theta = safe_arg(b1);
  const Complex phase = std::polar(1.0, theta);
  // 1 / (e^{i theta} (1 + |b1|))
  const Complex inv_scale = std::conj(phase) / (1.0 + mag);
  for (std::size_t i = k + 1; i < a.rows; ++i) col[i] = detail::mul(col[i], inv_scale);
  counter.add(a.rows - k, 0);
  col[k] = -phase;
  *tau = 1.0 + mag;
}

// Row/column-update kernel on a square view. Step k first brings column k
// (rows k..) and row k (columns k+1..) up to date with the k previous
// reflectors, then forms reflector k from the column. Only the entries a
// later step reads are ever written, so the trailing block is never
// materialized. When `final_block` is set the view reaches the bottom
// right corner of the matrix and its last column holds a scalar of R.
void row_column_kernel(MatrixView a, double* taus, bool final_block,
                       FlopCounter& counter) {
  const std::size_t m = a.rows;
  std::vector<Complex> row(m);
  for (std::size_t k = 0; k < m; ++k) {
    Complex* colk = a.col(k);
    for (std::size_t l = 0; l < k; ++l) {
      detail::axpy_sub(m - k, colk[l], a.col(l) + k, colk + k);
    }
    counter.add(k * (m - k), k * (m - k));

    if (final_block && k + 1 == m) break;

    if (k > 0) {
      for (std::size_t l = 0; l < k; ++l) row[l] = a(k, l);
      for (std::size_t j = k + 1; j < m; ++j) {
        a(k, j) -= dot(k, row.data(), a.col(j));
      }
      counter.add(k * (m - k - 1), k * (m - k - 1));
    }
    make_reflector_in_place(a, k, taus + k, counter);
  }
}

// Normalization factors e^{i theta_k} tau_k = -R_kk tau_k of a factorized
// diagonal block.
std::vector<Complex> normalization_factors(MatrixView d, const double* taus) {
  std::vector<Complex> out(d.rows);
  for (std::size_t k = 0; k < d.rows; ++k) out[k] = -d(k, k) * taus[k];
  return out;
}

PanelTriangles panel_triangles(MatrixView d, const double* taus, FlopCounter& counter) {
  const std::size_t nb = d.rows;
  PanelTriangles t{ComplexMatrix(nb), ComplexMatrix(nb)};
  const std::vector<Complex> scale = normalization_factors(d, taus);

  // T1^1 = 1/N_1 and
  // T1^{k+1} = [T1^k, -T1^k p_{k+1} / N_{k+1}; 0, 1 / N_{k+1}],
  // with p_{k+1} = D(1:k, k+1). The 1/N_1 in the base case is what makes
  // the first column come out normalized like every other one.
  for (std::size_t k = 0; k < nb; ++k) {
    const Complex inv = 1.0 / scale[k];
    for (std::size_t i = 0; i < k; ++i) {
      Complex s{};
      for (std::size_t l = i; l < k; ++l) s += detail::mul(t.t1(i, l), d(l, k));
      t.t1(i, k) = -detail::mul(s, inv);
    }
    t.t1(k, k) = inv;
  }
  // T2^1 = 1 and T2^{k+1} = [T2^k, 0; -q_{k+1} T2^k, 1], q_{k+1} = D(k+1, 1:k).
  for (std::size_t k = 0; k < nb; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex s{};
      for (std::size_t l = j; l < k; ++l) s += detail::mul(d(k, l), t.t2(l, j));
      t.t2(k, j) = -s;
    }
    t.t2(k, k) = 1.0;
  }
  const std::uint64_t cubic = nb * (nb * nb - 1) / 6;
  counter.add(2 * cubic + nb, 2 * cubic);
  return t;
}

// x <- x * t1 for upper-triangular t1, in place.
void trmm_right_upper(MatrixView x, const ComplexMatrix& t1, FlopCounter& counter) {
  const std::size_t nb = x.cols;
  const std::size_t m = x.rows;
  for (std::size_t k = nb; k-- > 0;) {
    Complex* xk = x.col(k);
    const Complex diag = t1(k, k);
    for (std::size_t i = 0; i < m; ++i) xk[i] = detail::mul(xk[i], diag);
    for (std::size_t l = 0; l < k; ++l) detail::axpy_sub(m, -t1(l, k), x.col(l), xk);
  }
  counter.add(m * nb * (nb + 1) / 2, m * nb * (nb - 1) / 2);
}

// y <- t2 * y for unit lower-triangular t2, in place.
void trmm_left_unit_lower(const ComplexMatrix& t2, MatrixView y, FlopCounter& counter) {
  const std::size_t nb = y.rows;
  for (std::size_t j = 0; j < y.cols; ++j) {
    Complex* yj = y.col(j);
    for (std::size_t k = nb; k-- > 1;) {
      Complex s{};
      for (std::size_t l = 0; l < k; ++l) s += detail::mul(t2(k, l), yj[l]);
      yj[k] += s;
    }
  }
  counter.add(y.cols * nb * (nb - 1) / 2, y.cols * nb * (nb - 1) / 2);
}

// Every reflector came from a unit column b with
//   ‖b‖² = |b_1|² + |N|² ‖u(2:)‖² = (tau - 1)² + tau² ‖u(2:)‖²,
// and the last diagonal entry of R must have unit modulus.
void check_unit_columns(const UnitaryFactorization& f) {
  const std::size_t n = f.dim();
  const double tol = unit_tolerance(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto col = f.packed.column(k);
    double tail = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) tail += detail::abs2(col[i]);
    const double tau = f.taus[k];
    const double norm2 = (tau - 1.0) * (tau - 1.0) + tau * tau * tail;
    if (!(std::abs(norm2 - 1.0) <= tol)) {
      throw NotUnitaryError("column " + std::to_string(k) +
                            " of the trailing block has squared norm " +
                            std::to_string(norm2) + "; input is not unitary");
    }
  }
  const double last = std::abs(f.packed(n - 1, n - 1));
  if (!(std::abs(last * last - 1.0) <= tol)) {
    throw NotUnitaryError("last diagonal entry has modulus " + std::to_string(last) +
                          "; input is not unitary");
  }
}

UnitaryFactorization finish(ComplexMatrix&& a, std::vector<double>&& taus) {
  UnitaryFactorization f;
  const std::size_t n = a.dim();
  f.phases.resize(n);
  for (std::size_t k = 0; k < n; ++k) f.phases[k] = safe_arg(a(k, k));
  f.packed = std::move(a);
  f.taus = std::move(taus);
  check_unit_columns(f);
  return f;
}

// y <- H y for H = I - tau u u^H acting on rows [k, n).
void apply_reflector(const std::vector<Complex>& u, double tau, std::size_t k,
                     Complex* y, std::size_t n) {
  const Complex w = detail::dot_conj(n - k, u.data() + k, y + k);
  detail::axpy_sub(n - k, w * tau, u.data() + k, y + k);
}

}  // namespace

std::vector<Complex> UnitaryFactorization::householder_vector(std::size_t k) const {
  const std::size_t n = dim();
  std::vector<Complex> u(n);
  u[k] = 1.0;
  for (std::size_t i = k + 1; i < n; ++i) u[i] = packed(i, k);
  return u;
}

Reflector reflector_from_column(std::span<const Complex> b, FlopCounter& counter,
                                double unit_tol) {
  if (b.empty()) throw ShapeError("reflector_from_column: empty column");
  double norm2 = 0.0;
  for (const auto& z : b) norm2 += detail::abs2(z);
  if (!(std::abs(std::sqrt(norm2) - 1.0) <= unit_tol)) {
    throw NumericalError("reflector_from_column: column norm " +
                         std::to_string(std::sqrt(norm2)) + " is not 1");
  }
  Reflector r;
  r.theta = safe_arg(b[0]);
  r.tau = 1.0 + std::abs(b[0]);
  const Complex inv_scale = std::conj(std::polar(1.0, r.theta)) / r.tau;
  r.u.resize(b.size());
  r.u[0] = 1.0;
  for (std::size_t i = 1; i < b.size(); ++i) r.u[i] = detail::mul(b[i], inv_scale);
  counter.add(b.size(), 0);
  return r;
}

UnitaryFactorization factorize_unblocked(ComplexMatrix a, FlopCounter& counter) {
  if (a.empty()) throw SizeError("factorize_unblocked: empty matrix");
  probe_norm_preservation(a);
  const std::size_t n = a.dim();
  std::vector<double> taus(n - 1);
  std::vector<double> scratch(n);
  row_column_kernel(detail::view_of(a), scratch.data(), true, counter);
  std::copy_n(scratch.begin(), n - 1, taus.begin());
  return finish(std::move(a), std::move(taus));
}

UnitaryFactorization factorize_unblocked(ComplexMatrix a) {
  FlopCounter counter;
  return factorize_unblocked(std::move(a), counter);
}

UnitaryFactorization factorize_blocked(ComplexMatrix a, const BlockingParams& params,
                                       FlopCounter& counter) {
  if (a.empty()) throw SizeError("factorize_blocked: empty matrix");
  if (params.block_size < 1) throw PreconditionError("block size must be >= 1");
  if (params.crossover < params.block_size) {
    throw PreconditionError("crossover must be >= block size");
  }
  probe_norm_preservation(a);

  const std::size_t n = a.dim();
  const auto nb = static_cast<std::size_t>(params.block_size);
  const auto nx = static_cast<std::size_t>(params.crossover);
  std::vector<double> scratch(n);
  MatrixView whole = detail::view_of(a);

  std::size_t i = 0;
  if (nb < n) {
    while (n - i > nx) {
      const std::size_t ib = std::min(nb, n - i);
      const std::size_t rest = n - i - ib;
      MatrixView diag = whole.block(i, i, ib, ib);
      row_column_kernel(diag, scratch.data() + i, false, counter);
      const PanelTriangles t = panel_triangles(diag, scratch.data() + i, counter);
      MatrixView below = whole.block(i + ib, i, rest, ib);
      MatrixView right = whole.block(i, i + ib, ib, rest);
      trmm_right_upper(below, t.t1, counter);
      trmm_left_unit_lower(t.t2, right, counter);
      detail::gemm_sub(below, right, whole.block(i + ib, i + ib, rest, rest),
                       params.threads);
      counter.add(rest * rest * ib, rest * rest * ib);
      i += ib;

      if (params.check_trailing_unitarity) {
        ComplexMatrix trailing(rest);
        for (std::size_t c = 0; c < rest; ++c) {
          std::copy_n(whole.col(i + c) + i, rest, trailing.column(c).data());
        }
        const double defect = unitarity_defect(trailing);
        if (!(defect <= unit_tolerance(n))) {
          throw NumericalError("trailing block at offset " + std::to_string(i) +
                               " lost unitarity (defect " + std::to_string(defect) + ")");
        }
      }
    }
  }
  row_column_kernel(whole.block(i, i, n - i, n - i), scratch.data() + i, true, counter);

  std::vector<double> taus(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(n - 1));
  return finish(std::move(a), std::move(taus));
}

UnitaryFactorization factorize_blocked(ComplexMatrix a, const BlockingParams& params) {
  FlopCounter counter;
  return factorize_blocked(std::move(a), params, counter);
}

PanelTriangles compute_panel_triangles(const ComplexMatrix& panel,
                                       std::span<const double> taus) {
  if (taus.size() != panel.dim()) {
    throw ShapeError("compute_panel_triangles: need one tau per panel column");
  }
  ComplexMatrix copy = panel;
  FlopCounter unused;
  return panel_triangles(detail::view_of(copy), taus.data(), unused);
}

ComplexMatrix reconstruct_unitary(const UnitaryFactorization& f) {
  const std::size_t n = f.dim();
  ComplexMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = std::polar(1.0, f.phases[k]);
  for (std::size_t k = n - 1; k-- > 0;) {
    const auto u = f.householder_vector(k);
    for (std::size_t j = 0; j < n; ++j) apply_reflector(u, f.taus[k], k, m.column(j).data(), n);
  }
  return m;
}

ComplexMatrix apply_reflectors_adjoint(const UnitaryFactorization& f, ComplexMatrix a) {
  const std::size_t n = f.dim();
  if (a.dim() != n) throw ShapeError("apply_reflectors_adjoint: dimension mismatch");
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto u = f.householder_vector(k);
    for (std::size_t j = 0; j < n; ++j) apply_reflector(u, f.taus[k], k, a.column(j).data(), n);
  }
  return a;
}

}  // namespace hqs
