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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hqs {

using Complex = std::complex<double>;

/// Dense square complex matrix, column-major: column j occupies the
/// contiguous range [j*dim, (j+1)*dim).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension. Throws SizeError for dim == 0.
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);

  /// Builds from row-major nested lists; convenient for small literals.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[col * dim_ + row];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[col * dim_ + row];
  }

  std::span<Complex> column(std::size_t col) noexcept {
    return {data_.data() + col * dim_, dim_};
  }
  std::span<const Complex> column(std::size_t col) const noexcept {
    return {data_.data() + col * dim_, dim_};
  }

  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }
  std::span<const Complex> values() const noexcept { return data_; }

  ComplexMatrix adjoint() const;

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Product a * b. Throws ShapeError on dimension mismatch.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |(M^H M - I)_ij|.
double unitarity_defect(const ComplexMatrix& m);

/// True iff max_ij |(M^H M - I)_ij| <= tol.
bool is_unitary(const ComplexMatrix& m, double tol);

/// Frobenius norm of a - b. Throws ShapeError on dimension mismatch.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entry magnitude of a - b.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Seeded, single-owner pseudo-random stream. Identical seeds produce
/// bit-identical sequences on the same standard library.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Standard complex normal: real and imaginary parts i.i.d. N(0, 1/2).
  Complex complex_normal();

  double uniform(double lo, double hi);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline constexpr int kMaxRandomQubits = 15;

/// Matrix of i.i.d. standard complex normal entries (Ginibre ensemble).
ComplexMatrix ginibre_matrix(std::size_t dim, RandomSource& rng);

/// Haar-distributed unitary on n_qubits qubits (dimension 2^n_qubits).
/// Throws SizeError unless 1 <= n_qubits <= kMaxRandomQubits.
ComplexMatrix haar_random_unitary(int n_qubits, RandomSource& rng);

/// Haar-distributed unit vector of the given length.
std::vector<Complex> haar_random_state(std::size_t length, RandomSource& rng);

/// 2^n for qubit counts; throws SizeError if the result does not fit.
std::size_t pow2(int n);

/// log2(dim) if dim is a power of two, otherwise -1.
int log2_exact(std::size_t dim) noexcept;

/// Phase of z with arg(0) := 0.
double safe_arg(Complex z) noexcept;

}  // namespace hqs
