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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Every bound below is fixed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hqsynth/householder.hpp"
#include "hqsynth/multiplexor.hpp"
#include "hqsynth/pipeline.hpp"
#include "hqsynth/simulator.hpp"
#include "oracles.hpp"

using namespace hqs;

namespace {

// Tolerances and bands.
constexpr double kResidualPerDim = 1e-10;  // AC1: residual <= 1e-10 * 2^n
constexpr int kAc1Seeds = 20;
constexpr double kFlopRatioLo9 = 1.7, kFlopRatioHi9 = 2.3;
constexpr double kFlopRatioLo11 = 1.85, kFlopRatioHi11 = 2.15;
constexpr double kFlopConstLo = 0.57, kFlopConstHi = 0.80;
constexpr double kCnotRatioLo = 3.6, kCnotRatioHi = 4.4;
constexpr double kCnotConstLo = 1.2, kCnotConstHi = 3.0;
constexpr double kBlockedTol = 1e-12;
constexpr double kDiagonalTol = 1e-12;
constexpr int kAc6Matrices = 50;
constexpr double kPassTol = 1e-12;
constexpr double kMuxSimTol = 1e-12;
constexpr double kSlopeLo = 5.0, kSlopeHi = 11.0;
constexpr int kTimingRepeats = 3;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Haar matrices at n = 9..11, drawn once and shared.
const ComplexMatrix& big_haar(int n) {
  static std::map<int, ComplexMatrix> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    RandomSource rng(9000 + static_cast<std::uint64_t>(n));
    it = cache.emplace(n, haar_random_unitary(n, rng)).first;
  }
  return it->second;
}

Outcome ac1_correctness() {
  Outcome o;
  double worst_ratio = 0.0;
  for (int n = 1; n <= 7; ++n) {
    const double bound = kResidualPerDim * std::pow(2.0, n);
    double worst = 0.0;
    for (int s = 1; s <= kAc1Seeds; ++s) {
      RandomSource rng(100 * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(s));
      const auto u = haar_random_unitary(n, rng);
      const auto c = synthesize_unitary(u).circuit;
      worst = std::max(worst, frobenius_distance(circuit_to_matrix(c), u));
    }
    if (worst > bound) o.pass = false;
    worst_ratio = std::max(worst_ratio, worst / bound);
    o.detail += " n" + std::to_string(n) + "=" + fmt("%.1e", worst);
  }
  o.detail = "worst residual/bound " + fmt("%.2e", worst_ratio) + ";" + o.detail;
  return o;
}

double flop_ratio(int n, FlopCounter* modified_out = nullptr) {
  FlopCounter mod, gen;
  factorize_blocked(big_haar(n), {}, mod);
  factorize_generic_qr(big_haar(n), gen);
  if (modified_out) *modified_out = mod;
  return static_cast<double>(gen.total()) / static_cast<double>(mod.total());
}

FlopCounter g_modified_11;  // filled by AC2, read by AC3

Outcome ac2_flop_ratio() {
  const double r9 = flop_ratio(9);
  const double r11 = flop_ratio(11, &g_modified_11);
  Outcome o;
  o.pass = r9 >= kFlopRatioLo9 && r9 <= kFlopRatioHi9 && r11 >= kFlopRatioLo11 && r11 <= kFlopRatioHi11;
  o.detail = "generic/modified at N=2^9 " + fmt("%.4f", r9) + ", at N=2^11 " + fmt("%.4f", r11);
  return o;
}

Outcome ac3_flop_constant() {
  const double n = 2048.0;
  const double c = static_cast<double>(g_modified_11.total()) / (n * n * n);
  Outcome o;
  o.pass = c >= kFlopConstLo && c <= kFlopConstHi;
  o.detail = "flops/N^3 at N=2^11 " + fmt("%.4f", c);
  return o;
}

std::uint64_t synth_cnots(int n) {
  if (n >= 9) return synthesize_unitary(big_haar(n)).report.counts.cnot;
  RandomSource rng(7000 + static_cast<std::uint64_t>(n));
  return synthesize_unitary(haar_random_unitary(n, rng)).report.counts.cnot;
}

Outcome ac4_gate_scaling() {
  Outcome o;
  std::map<int, double> c;
  for (int n = 6; n <= 11; ++n) c[n] = static_cast<double>(synth_cnots(n));
  for (int n = 6; n <= 10; ++n) {
    const double r = c[n + 1] / c[n];
    if (r < kCnotRatioLo || r > kCnotRatioHi) o.pass = false;
    o.detail += " c" + std::to_string(n + 1) + "/c" + std::to_string(n) + "=" + fmt("%.4f", r);
  }
  const double k = c[10] / std::pow(4.0, 10);
  if (k < kCnotConstLo || k > kCnotConstHi) o.pass = false;
  o.detail = "c(10)/4^10 " + fmt("%.4f", k) + ";" + o.detail;
  return o;
}

Outcome ac5_blocked() {
  Outcome o;
  double worst = 0.0;
  RandomSource rng(5);
  for (int n = 3; n <= 7; ++n) {
    const auto u = haar_random_unitary(n, rng);
    const auto ref = factorize_unblocked(u);
    for (int nb : {1, 2, 4, 8, 16, 32}) {
      const auto f = factorize_blocked(u, {nb, nb});
      double d = max_abs_difference(f.packed, ref.packed);
      for (std::size_t k = 0; k < ref.taus.size(); ++k) d = std::max(d, std::abs(f.taus[k] - ref.taus[k]));
      for (std::size_t k = 0; k < ref.phases.size(); ++k) {
        d = std::max(d, std::abs(std::polar(1.0, f.phases[k]) - std::polar(1.0, ref.phases[k])));
      }
      worst = std::max(worst, d);
    }
  }
  o.pass = worst <= kBlockedTol;
  o.detail = "max entrywise difference " + fmt("%.2e", worst) + " over N=8..128, nb=1..32";
  return o;
}

Outcome ac6_diagonal_r() {
  Outcome o;
  double off = 0.0, diag = 0.0;
  RandomSource rng(6);
  for (int t = 0; t < kAc6Matrices; ++t) {
    const int n = 1 + t % 8;  // N = 2..256
    const auto u = haar_random_unitary(n, rng);
    const auto f = factorize_blocked(u, {8, 16});
    const auto r = apply_reflectors_adjoint(f, u);
    for (std::size_t j = 0; j < r.dim(); ++j) {
      for (std::size_t i = 0; i < r.dim(); ++i) {
        if (i == j) {
          diag = std::max(diag, std::abs(std::abs(r(i, j)) - 1.0));
        } else {
          off = std::max(off, std::abs(r(i, j)));
        }
      }
    }
  }
  o.pass = off <= kDiagonalTol && diag <= kDiagonalTol;
  o.detail = "max |R_ij| off-diagonal " + fmt("%.2e", off) + ", max ||R_kk|-1| " + fmt("%.2e", diag);
  return o;
}

Outcome ac7_passes() {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    RandomSource rng(70 + static_cast<std::uint64_t>(n));
    const auto u = haar_random_unitary(n, rng);
    SynthesisOptions off;
    off.merge_diagonals = false;
    off.cancel_x_layers = false;
    const auto a = synthesize_unitary(u);
    const auto b = synthesize_unitary(u, off);
    worst = std::max(worst, max_abs_difference(circuit_to_matrix(a.circuit), circuit_to_matrix(b.circuit)));
    if (n >= 2 && a.report.counts.total >= b.report.counts.total) o.pass = false;
    o.detail += " n" + std::to_string(n) + ":" + std::to_string(a.report.counts.total) + "<" +
                std::to_string(b.report.counts.total);
  }
  if (worst > kPassTol) o.pass = false;
  o.detail = "max matrix difference " + fmt("%.2e", worst) + "; gates" + o.detail;
  return o;
}

Outcome ac8_multiplexor() {
  Outcome o;
  double worst = 0.0;
  RandomSource rng(8);
  for (int c = 0; c <= 8; ++c) {
    for (auto axis : {RotationAxis::Y, RotationAxis::Z}) {
      RotationMultiplexor m;
      m.axis = axis;
      m.target = c;
      for (int q = 0; q < c; ++q) m.controls.push_back(q);
      for (std::size_t j = 0; j < (std::size_t{1} << c); ++j) m.angles.push_back(rng.uniform(-3.0, 3.0));
      const auto circ = decompose_rotation_multiplexor(m);
      const auto k = gate_counts(circ);
      const std::size_t expect_cnot = c == 0 ? 0 : (std::size_t{1} << c);
      if (k.cnot != expect_cnot || k.rotation != (std::size_t{1} << c) || k.x != 0) o.pass = false;
      if (c <= 5) {
        worst = std::max(worst, max_abs_difference(circuit_to_matrix(circ), oracle::multiplexor_matrix(m, c + 1)));
      }
    }
  }
  if (worst > kMuxSimTol) o.pass = false;
  o.detail = "counts exact for c<=8 (c=0: one rotation, no CNOT); max simulator difference c<=5 " +
             fmt("%.2e", worst);
  return o;
}

double best_time_ms(int n) {
  const int reps = n >= 11 ? 1 : kTimingRepeats;
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto a = big_haar(n);
    const auto t0 = Clock::now();
    auto f = factorize_blocked(std::move(a));
    best = std::min(best, ms_since(t0));
    (void)f;
  }
  return best;
}

Outcome ac9_time_slope() {
  const double t9 = best_time_ms(9), t10 = best_time_ms(10), t11 = best_time_ms(11);
  const double mean = (t10 / t9 + t11 / t10) / 2;
  Outcome o;
  o.pass = mean >= kSlopeLo && mean <= kSlopeHi;
  o.detail = "t(ms) " + fmt("%.1f", t9) + ", " + fmt("%.1f", t10) + ", " + fmt("%.1f", t11) +
             "; mean ratio " + fmt("%.3f", mean);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 correctness n=1..7", ac1_correctness},
      {"AC2 flop ratio", ac2_flop_ratio},
      {"AC3 flop constant", ac3_flop_constant},
      {"AC4 CNOT growth", ac4_gate_scaling},
      {"AC5 blocked == unblocked", ac5_blocked},
      {"AC6 R is diagonal", ac6_diagonal_r},
      {"AC7 merge/cancel passes", ac7_passes},
      {"AC8 multiplexor counts", ac8_multiplexor},
      {"AC9 time slope", ac9_time_slope},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), ms_since(t0) / 1000);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
