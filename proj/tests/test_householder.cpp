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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hqsynth/errors.hpp"
#include "hqsynth/householder.hpp"
#include "oracles.hpp"

using namespace hqs;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix haar_dim(std::size_t dim, std::uint64_t seed) {
  RandomSource rng(seed);
  return haar_random_unitary(log2_exact(dim), rng);
}

double max_packed_difference(const UnitaryFactorization& a, const UnitaryFactorization& b) {
  double d = max_abs_difference(a.packed, b.packed);
  for (std::size_t k = 0; k < a.taus.size(); ++k) d = std::max(d, std::abs(a.taus[k] - b.taus[k]));
  for (std::size_t k = 0; k < a.phases.size(); ++k) {
    d = std::max(d, std::abs(std::polar(1.0, a.phases[k]) - std::polar(1.0, b.phases[k])));
  }
  return d;
}

// H = I - tau u u^H applied to b.
std::vector<Complex> apply_h(const Reflector& r, const std::vector<Complex>& b) {
  Complex w{};
  for (std::size_t i = 0; i < b.size(); ++i) w += std::conj(r.u[i]) * b[i];
  std::vector<Complex> out = b;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= r.tau * r.u[i] * w;
  return out;
}

}  // namespace

TEST_CASE("reflector_from_column examples") {
  FlopCounter fc;
  SUBCASE("b = (1, 0)") {
    auto r = reflector_from_column(std::vector<Complex>{1, 0}, fc);
    CHECK(r.theta == 0.0);
    CHECK(r.tau == 2.0);
    CHECK(r.u == std::vector<Complex>{1, 0});
    auto hb = apply_h(r, {1, 0});
    CHECK(std::abs(hb[0] - Complex{-1, 0}) < 1e-15);
    CHECK(std::abs(hb[1]) < 1e-15);
  }
  SUBCASE("b = (0, 1), arg(0) = 0") {
    auto r = reflector_from_column(std::vector<Complex>{0, 1}, fc);
    CHECK(r.theta == 0.0);
    CHECK(r.tau == 1.0);
    CHECK(r.u == std::vector<Complex>{1, 1});
    auto hb = apply_h(r, {0, 1});
    CHECK(std::abs(hb[0] - Complex{-1, 0}) < 1e-15);
    CHECK(std::abs(hb[1]) < 1e-15);
  }
  SUBCASE("b = (i, 0)") {
    auto r = reflector_from_column(std::vector<Complex>{Complex{0, 1}, 0}, fc);
    CHECK(r.theta == doctest::Approx(kPi / 2));
    CHECK(r.tau == 2.0);
    auto hb = apply_h(r, {Complex{0, 1}, 0});
    CHECK(std::abs(hb[0] - Complex{0, -1}) < 1e-15);
  }
  SUBCASE("non-unit column") {
    CHECK_THROWS_AS(reflector_from_column(std::vector<Complex>{2, 0}, fc), NumericalError);
  }
}

TEST_CASE("reflector properties on random unit columns") {
  RandomSource rng(3);
  FlopCounter fc;
  for (int t = 0; t < 200; ++t) {
    auto b = haar_random_state(9, rng);
    auto r = reflector_from_column(b, fc);
    CHECK(r.u[0] == Complex{1, 0});
    CHECK(r.tau >= 1.0);
    CHECK(r.tau <= 2.0);
    auto hb = apply_h(r, b);
    CHECK(std::abs(hb[0] + std::polar(1.0, r.theta)) < 1e-13);
    for (std::size_t i = 1; i < hb.size(); ++i) CHECK(std::abs(hb[i]) < 1e-13);
    // tau e^{i theta} is the first entry of the unscaled u = b + e^{i theta} e_1.
    const Complex u1 = b[0] + std::polar(1.0, r.theta);
    CHECK(std::abs(r.tau * std::polar(1.0, r.theta) - u1) < 1e-14);
  }
}

TEST_CASE("factorize_unblocked small examples") {
  SUBCASE("identity") {
    auto f = factorize_unblocked(ComplexMatrix::identity(2));
    CHECK(std::abs(std::polar(1.0, f.phases[0]) - Complex{-1, 0}) < 1e-15);
    CHECK(std::abs(std::polar(1.0, f.phases[1]) - Complex{1, 0}) < 1e-15);
    CHECK(max_abs_difference(reconstruct_unitary(f), ComplexMatrix::identity(2)) < 1e-14);
  }
  SUBCASE("X") {
    auto x = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    auto f = factorize_unblocked(x);
    CHECK(f.taus[0] == 1.0);
    CHECK(f.packed(1, 0) == Complex{1, 0});
    CHECK(std::abs(std::polar(1.0, f.phases[0]) + 1.0) < 1e-15);
    CHECK(std::abs(std::polar(1.0, f.phases[1]) + 1.0) < 1e-15);
    CHECK(max_abs_difference(reconstruct_unitary(f), x) < 1e-14);
  }
  SUBCASE("Haar N=8") {
    auto a = haar_dim(8, 9);
    CHECK(max_abs_difference(reconstruct_unitary(factorize_unblocked(a)), a) < 1e-12);
  }
}

TEST_CASE("factorize_unblocked agrees with a sequential full-update QR") {
  for (std::size_t dim : {2u, 4u, 16u, 64u}) {
    auto a = haar_dim(dim, 100 + dim);
    auto f = factorize_unblocked(a);
    auto o = oracle::sequential_qr(a);
    CAPTURE(dim);
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < dim; ++k) {
      worst = std::max(worst, std::abs(f.taus[k] - o.tau[k]));
      for (std::size_t i = k + 1; i < dim; ++i) {
        worst = std::max(worst, std::abs(f.packed(i, k) - o.u[k][i - k]));
      }
      for (std::size_t j = k + 1; j < dim; ++j) {
        worst = std::max(worst, std::abs(f.packed(k, j) - o.row[k][j - k - 1]));
      }
    }
    for (std::size_t k = 0; k < dim; ++k) {
      worst = std::max(worst, std::abs(std::polar(1.0, f.phases[k]) - o.diag[k]));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("factorization invariants: tau range, |R_kk| = 1, reconstruction") {
  for (std::size_t dim : {8u, 32u, 128u}) {
    auto a = haar_dim(dim, 7 * dim);
    auto f = factorize_blocked(a, {8, 8});
    for (double t : f.taus) {
      CHECK(t >= 1.0);
      CHECK(t <= 2.0);
    }
    for (std::size_t k = 0; k < dim; ++k) CHECK(std::abs(std::abs(f.packed(k, k)) - 1.0) < 1e-12);
    CHECK(max_abs_difference(reconstruct_unitary(f), a) < 1e-12 * static_cast<double>(dim));
  }
}

TEST_CASE("reconstruct_unitary examples") {
  auto i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_difference(reconstruct_unitary(factorize_unblocked(i2)), i2) < 1e-14);
  auto a = haar_dim(32, 5);
  CHECK(max_abs_difference(reconstruct_unitary(factorize_unblocked(a)), a) < 1e-12);
}

TEST_CASE("the triangular factor of a unitary matrix is diagonal") {
  for (std::size_t dim : {4u, 16u, 64u}) {
    auto a = haar_dim(dim, dim + 1);
    auto f = factorize_blocked(a, {4, 4});
    auto r = apply_reflectors_adjoint(f, a);
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t i = 0; i < dim; ++i) {
        if (i == j) {
          CHECK(std::abs(std::abs(r(i, i)) - 1.0) <= 1e-12);
          CHECK(std::abs(r(i, i) - std::polar(1.0, f.phases[i])) <= 1e-12);
        } else {
          CHECK(std::abs(r(i, j)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("blocked factorization equals unblocked") {
  for (std::size_t dim : {8u, 16u, 32u, 64u}) {
    auto a = haar_dim(dim, 3 * dim);
    auto ref = factorize_unblocked(a);
    for (int nb : {1, 2, 4, 8, 16}) {
      CAPTURE(dim);
      CAPTURE(nb);
      auto f = factorize_blocked(a, {nb, nb});
      CHECK(max_packed_difference(f, ref) <= 1e-12);
    }
  }
}

TEST_CASE("blocked with nb >= N is bit-identical to unblocked") {
  auto a = haar_dim(16, 4);
  auto ref = factorize_unblocked(a);
  auto f = factorize_blocked(a, {16, 16});
  CHECK(f.packed == ref.packed);
  CHECK(f.taus == ref.taus);
  CHECK(f.phases == ref.phases);
  auto g = factorize_blocked(a, {32, 128});
  CHECK(g.packed == ref.packed);
}

TEST_CASE("blocked factorization with threads agrees") {
  auto a = haar_dim(256, 12);
  auto ref = factorize_blocked(a, {16, 16, 1});
  auto par = factorize_blocked(a, {16, 16, 3});
  CHECK(max_packed_difference(par, ref) <= 1e-12 * 256);
}

TEST_CASE("debug trailing-unitarity checks pass on unitary input") {
  auto a = haar_dim(64, 8);
  BlockingParams p{8, 8};
  p.check_trailing_unitarity = true;
  CHECK_NOTHROW(factorize_blocked(a, p));
}

TEST_CASE("invalid blocking parameters") {
  auto a = haar_dim(8, 1);
  CHECK_THROWS_AS(factorize_blocked(a, {0, 8}), PreconditionError);
  CHECK_THROWS_AS(factorize_blocked(a, {8, 4}), PreconditionError);
}

TEST_CASE("non-unitary input is rejected") {
  RandomSource rng(2);
  auto g = ginibre_matrix(16, rng);
  CHECK_THROWS_AS(factorize_unblocked(g), NotUnitaryError);
  CHECK_THROWS_AS(factorize_blocked(g, {4, 4}), NotUnitaryError);

  // Unitary except for one scaled column.
  auto a = haar_dim(16, 3);
  for (auto& x : a.column(5)) x *= 1.001;
  CHECK_THROWS_AS(factorize_unblocked(a), NotUnitaryError);
  CHECK_THROWS_AS(factorize_blocked(a, {4, 4}), NotUnitaryError);
}

TEST_CASE("panel triangles base case") {
  auto a = haar_dim(8, 21);
  auto f = factorize_unblocked(a);
  ComplexMatrix panel(1);
  panel(0, 0) = f.packed(0, 0);
  auto t = compute_panel_triangles(panel, std::span<const double>(f.taus).first(1));
  const Complex b1 = a(0, 0);
  const Complex norm_factor = std::polar(1.0, oracle::arg0(b1)) * (1.0 + std::abs(b1));
  CHECK(std::abs(t.t1(0, 0) - 1.0 / norm_factor) < 1e-14);
  CHECK(t.t2(0, 0) == Complex{1, 0});
}

TEST_CASE("panel triangles reproduce sequential column and row sweeps") {
  for (std::size_t nb : {2u, 3u, 4u}) {
    const std::size_t dim = 8;
    auto a = haar_dim(dim, 40 + nb);
    auto o = oracle::sequential_qr(a);
    auto f = factorize_unblocked(a);
    ComplexMatrix panel(nb);
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t i = 0; i < nb; ++i) panel(i, j) = f.packed(i, j);
    auto t = compute_panel_triangles(panel, std::span<const double>(f.taus).first(nb));
    CAPTURE(nb);

    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t i = j + 1; i < nb; ++i) CHECK(t.t1(i, j) == Complex{});
      for (std::size_t i = 0; i < j; ++i) CHECK(t.t2(i, j) == Complex{});
      CHECK(t.t2(j, j) == Complex{1, 0});
    }

    // A21 * t1: original rows nb.. of columns 0..nb-1 become Householder vectors.
    for (std::size_t i = nb; i < dim; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        Complex s{};
        for (std::size_t l = 0; l <= j; ++l) s += a(i, l) * t.t1(l, j);
        CHECK(std::abs(s - o.u[j][i - j]) < 1e-13);
      }
    }
    // t2 * A12: original rows 0..nb-1 of columns nb.. become the stored rows.
    for (std::size_t i = 0; i < nb; ++i) {
      for (std::size_t j = nb; j < dim; ++j) {
        Complex s{};
        for (std::size_t l = 0; l <= i; ++l) s += t.t2(i, l) * a(l, j);
        CHECK(std::abs(s - o.row[i][j - i - 1]) < 1e-13);
      }
    }
  }
}

TEST_CASE("panel triangles of an identity panel are triangular") {
  auto f = factorize_unblocked(ComplexMatrix::identity(8));
  ComplexMatrix panel(4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) panel(i, j) = f.packed(i, j);
  auto t = compute_panel_triangles(panel, std::span<const double>(f.taus).first(4));
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = j + 1; i < 4; ++i) CHECK(t.t1(i, j) == Complex{});
    for (std::size_t i = 0; i < j; ++i) CHECK(t.t2(i, j) == Complex{});
  }
}

TEST_CASE("flop counts") {
  SUBCASE("modified QR is about (2/3) N^3") {
    auto a = haar_dim(256, 77);
    FlopCounter fc;
    factorize_blocked(a, {32, 32}, fc);
    const double expected = 2.0 / 3.0 * std::pow(256.0, 3);
    CHECK(std::abs(static_cast<double>(fc.total()) - expected) <= 0.25 * expected);
  }
  SUBCASE("unblocked at N=512 is within 15% of (2/3) N^3") {
    auto a = haar_dim(512, 78);
    FlopCounter fc;
    factorize_unblocked(a, fc);
    const double ratio = static_cast<double>(fc.total()) / std::pow(512.0, 3);
    CHECK(std::abs(ratio - 2.0 / 3.0) <= 0.15 * 2.0 / 3.0);
  }
  SUBCASE("generic over modified at N=64") {
    auto a = haar_dim(64, 79);
    FlopCounter mod, gen;
    factorize_unblocked(a, mod);
    factorize_generic_qr(a, gen);
    const double ratio = static_cast<double>(gen.total()) / static_cast<double>(mod.total());
    CHECK(ratio >= 1.7);
    CHECK(ratio <= 2.3);
  }
  SUBCASE("counters only grow") {
    auto a = haar_dim(32, 80);
    FlopCounter fc;
    factorize_unblocked(a, fc);
    auto first = fc.total();
    factorize_blocked(a, {4, 4}, fc);
    CHECK(fc.total() > first);
  }
}

TEST_CASE("generic QR baseline") {
  SUBCASE("identity") {
    auto qr = factorize_generic_qr(ComplexMatrix::identity(4));
    auto q = qr.q();
    auto r = qr.r();
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(std::abs(r(k, k)) - 1.0) < 1e-13);
    CHECK(max_abs_difference(q * r, ComplexMatrix::identity(4)) < 1e-13);
  }
  SUBCASE("Gaussian input") {
    RandomSource rng(6);
    auto g = ginibre_matrix(16, rng);
    auto qr = factorize_generic_qr(g);
    auto q = qr.q();
    auto r = qr.r();
    CHECK(is_unitary(q, 1e-12));
    for (std::size_t j = 0; j < 16; ++j)
      for (std::size_t i = j + 1; i < 16; ++i) CHECK(r(i, j) == Complex{});
    CHECK(max_abs_difference(q * r, g) < 1e-12);
  }
  SUBCASE("zero column") {
    auto z = ComplexMatrix::identity(3);
    z(0, 0) = 0;
    auto qr = factorize_generic_qr(z);
    CHECK(qr.taus[0] == 0.0);
    CHECK(max_abs_difference(qr.q() * qr.r(), z) < 1e-14);
  }
}
