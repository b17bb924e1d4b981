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

#include "hqsynth/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>

#include "hqsynth/errors.hpp"

namespace hqs {
namespace {

using Clock = std::chrono::steady_clock;

void check_range(int n) {
  if (n < 1 || n > kMaxBenchQubits) {
    throw SizeError("bench supports 1.." + std::to_string(kMaxBenchQubits) + " qubits, got " +
                    std::to_string(n));
  }
}

BenchRecord run_on(BenchMode mode, int n, std::uint64_t seed, const ComplexMatrix& u,
                   const BenchConfig& config) {
  BenchRecord r;
  r.mode = mode;
  r.n_qubits = n;
  r.seed = seed;
  const auto t0 = Clock::now();
  switch (mode) {
    case BenchMode::ModifiedQr: {
      BlockingParams p;
      p.block_size = config.synth.block_size;
      p.crossover = config.synth.crossover;
      p.threads = config.threads;
      factorize_blocked(u, p, r.flops);
      break;
    }
    case BenchMode::GenericQr:
      factorize_generic_qr(u, r.flops);
      break;
    case BenchMode::FullSynth: {
      auto opts = config.synth;
      opts.threads = config.threads;
      opts.verify = false;
      auto res = synthesize_unitary(u, opts);
      r.flops = res.report.flops;
      r.counts = res.report.counts;
      break;
    }
  }
  r.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

}  // namespace

std::string_view to_string(BenchMode mode) noexcept {
  switch (mode) {
    case BenchMode::ModifiedQr: return "modified-qr";
    case BenchMode::GenericQr: return "generic-qr";
    case BenchMode::FullSynth: return "full-synth";
  }
  return "?";
}

std::optional<BenchMode> parse_bench_mode(std::string_view text) noexcept {
  for (auto m : {BenchMode::ModifiedQr, BenchMode::GenericQr, BenchMode::FullSynth}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

BenchRecord run_bench_case(BenchMode mode, int n_qubits, std::uint64_t seed,
                           const BenchConfig& config) {
  check_range(n_qubits);
  RandomSource rng(seed);
  const auto u = haar_random_unitary(n_qubits, rng);
  return run_on(mode, n_qubits, seed, u, config);
}

std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record) {
  if (config.min_qubits > config.max_qubits) throw PreconditionError("bench: empty qubit range");
  check_range(config.min_qubits);
  check_range(config.max_qubits);
  std::vector<BenchRecord> out;
  for (int n = config.min_qubits; n <= config.max_qubits; ++n) {
    for (auto seed : config.seeds) {
      RandomSource rng(seed);
      const auto u = haar_random_unitary(n, rng);
      for (auto mode : config.modes) {
        out.push_back(run_on(mode, n, seed, u, config));
        if (on_record) on_record(out.back());
      }
    }
  }
  return out;
}

void write_bench_header(std::ostream& out) {
  out << "mode,n,seed,time_ms,flops_mul,flops_add,cnot,rotation,x\n";
}

void write_bench_row(std::ostream& out, const BenchRecord& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.3f", r.time_ms);
  out << to_string(r.mode) << ',' << r.n_qubits << ',' << r.seed << ',' << time << ','
      << r.flops.complex_mul << ',' << r.flops.complex_add << ',' << r.counts.cnot << ','
      << r.counts.rotation << ',' << r.counts.x << '\n';
}

}  // namespace hqs
