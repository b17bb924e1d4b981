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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "hqsynth/pipeline.hpp"

namespace hqs {

enum class BenchMode { ModifiedQr, GenericQr, FullSynth };

std::string_view to_string(BenchMode mode) noexcept;
std::optional<BenchMode> parse_bench_mode(std::string_view text) noexcept;

struct BenchRecord {
  BenchMode mode = BenchMode::ModifiedQr;
  int n_qubits = 0;
  std::uint64_t seed = 0;
  double time_ms = 0.0;  // factorization or synthesis only, no generation or I/O
  FlopCounter flops;
  GateCounts counts;     // full-synth only
};

inline constexpr int kMaxBenchQubits = 12;

struct BenchConfig {
  int min_qubits = 1;
  int max_qubits = 8;
  std::vector<BenchMode> modes{BenchMode::ModifiedQr, BenchMode::GenericQr};
  std::vector<std::uint64_t> seeds{1};
  int threads = 1;
  SynthesisOptions synth;
};

/// One run on the Haar matrix drawn from `seed`. Throws SizeError above
/// kMaxBenchQubits.
BenchRecord run_bench_case(BenchMode mode, int n_qubits, std::uint64_t seed,
                           const BenchConfig& config);

/// Loops n, then seed, then mode; the matrix for (n, seed) is drawn once.
/// on_record, if set, sees each record as soon as it is produced.
std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record = {});

/// mode,n,seed,time_ms,flops_mul,flops_add,cnot,rotation,x
void write_bench_header(std::ostream& out);
void write_bench_row(std::ostream& out, const BenchRecord& r);

}  // namespace hqs
