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

// hqsynth: random | synth | verify | bench | counts
//
// Exit codes: 0 success, 1 other error, 2 unreadable input or bad usage,
// 3 matrix not unitary, 4 verification failed.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hqsynth/bench.hpp"
#include "hqsynth/errors.hpp"
#include "hqsynth/matrix_io.hpp"
#include "hqsynth/pipeline.hpp"
#include "hqsynth/qasm.hpp"
#include "hqsynth/simulator.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotUnitary = 3;
constexpr int kExitVerify = 4;

constexpr int kForcedVerifyLimit = 14;

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw hqs::Error("cannot open '" + path.string() + "' for writing");
  out << text << '\n';
  if (!out) throw hqs::Error("failed writing '" + path.string() + "'");
}

struct RandomArgs {
  int n = 1;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_random(const RandomArgs& a) {
  hqs::RandomSource rng(a.seed);
  hqs::write_matrix(a.out, hqs::haar_random_unitary(a.n, rng));
  return 0;
}

struct SynthArgs {
  std::string in;
  std::string qasm;
  std::string report;
  hqs::SynthesisOptions opts;
  bool no_merge = false;
  bool no_cancel_x = false;
  bool force_verify = false;
};

int cmd_synth(SynthArgs a) {
  const auto u = hqs::read_matrix(a.in);
  auto opts = a.opts;
  opts.merge_diagonals = !a.no_merge;
  opts.cancel_x_layers = !a.no_cancel_x;
  const bool verify = opts.verify;
  opts.verify = false;
  if (a.force_verify) opts.max_verify_qubits = kForcedVerifyLimit;
  const int n = hqs::log2_exact(u.dim());
  if (verify && n > opts.max_verify_qubits) {
    std::cerr << "error: verification is limited to " << opts.max_verify_qubits
              << " qubits; pass --force-verify to override\n";
    return kExitError;
  }

  auto result = hqs::synthesize_unitary(u, opts);
  hqs::export_qasm(result.circuit, a.qasm);
  bool ok = true;
  if (verify) ok = hqs::attach_verification(u, result.circuit, opts, result.report);
  const auto json = hqs::to_json(result.report);
  if (a.report.empty()) {
    std::cout << json << '\n';
  } else {
    write_text(a.report, json);
  }
  if (!ok) {
    std::cerr << "verification failed: residual " << *result.report.residual << " > "
              << opts.tolerance << '\n';
    return kExitVerify;
  }
  return 0;
}

struct VerifyArgs {
  std::string matrix;
  std::string qasm;
  double tol = 1e-10;
  bool self_unitary = false;
  bool force_verify = false;
  int threads = 1;
};

int cmd_verify(const VerifyArgs& a) {
  const auto u = hqs::read_matrix(a.matrix);
  if (a.self_unitary) {
    const double defect = hqs::unitarity_defect(u);
    std::cout << "{\"unitarity_defect\": " << defect << "}\n";
    return defect <= a.tol ? 0 : kExitNotUnitary;
  }
  if (a.qasm.empty()) {
    std::cerr << "error: give a QASM file or --self-unitary\n";
    return kExitParse;
  }
  const auto c = hqs::parse_qasm(a.qasm);
  if (u.dim() != hqs::pow2(c.n_qubits())) {
    std::cerr << "error: matrix dimension " << u.dim() << " does not match " << c.n_qubits()
              << " qubits\n";
    return kExitParse;
  }
  const int limit = a.force_verify ? kForcedVerifyLimit : 7;
  if (c.n_qubits() > limit) {
    std::cerr << "error: verification is limited to " << limit
              << " qubits; pass --force-verify to override\n";
    return kExitError;
  }
  const auto v = hqs::verify_synthesis(u, c, a.tol, limit, a.threads);
  std::cout << "{\"residual\": " << v.residual << ", \"ok\": " << (v.ok ? "true" : "false")
            << "}\n";
  return v.ok ? 0 : kExitVerify;
}

struct BenchArgs {
  int min_qubits = 1;
  int max_qubits = 8;
  std::vector<std::string> modes{"modified-qr", "generic-qr"};
  std::vector<std::uint64_t> seeds{1};
  std::string out;
  bool append = false;
  int threads = 1;
  int block_size = 32;
  int crossover = 128;
};

int cmd_bench(const BenchArgs& a) {
  hqs::BenchConfig config;
  config.min_qubits = a.min_qubits;
  config.max_qubits = a.max_qubits;
  config.modes.clear();
  for (const auto& m : a.modes) {
    const auto mode = hqs::parse_bench_mode(m);
    if (!mode) {
      std::cerr << "error: unknown mode '" << m << "'\n";
      return kExitParse;
    }
    config.modes.push_back(*mode);
  }
  config.seeds = a.seeds;
  config.threads = a.threads;
  config.synth.block_size = a.block_size;
  config.synth.crossover = a.crossover;

  std::ofstream file;
  std::ostream* out = &std::cout;
  bool header = true;
  if (!a.out.empty()) {
    header = !(a.append && std::filesystem::exists(a.out) && std::filesystem::file_size(a.out) > 0);
    file.open(a.out, a.append ? std::ios::app : std::ios::trunc);
    if (!file) throw hqs::Error("cannot open '" + a.out + "' for writing");
    out = &file;
  }
  if (header) hqs::write_bench_header(*out);
  hqs::run_bench(config, [&](const hqs::BenchRecord& r) {
    hqs::write_bench_row(*out, r);
    out->flush();
  });
  if (!*out) throw hqs::Error("failed writing bench output");
  return 0;
}

int cmd_counts(int n) {
  const auto c = hqs::predicted_gate_counts(n);
  std::cout << "{\"cnot\":" << c.cnot << ",\"rotation\":" << c.rotation << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary synthesis through Householder reflections"};
  app.require_subcommand(1);

  RandomArgs random_args;
  auto* random = app.add_subcommand("random", "Write a Haar-random unitary");
  random->add_option("-n,--qubits", random_args.n, "Qubit count")
      ->required()
      ->check(CLI::Range(1, hqs::kMaxRandomQubits));
  random->add_option("-s,--seed", random_args.seed, "Random seed");
  random->add_option("-o,--out", random_args.out, "Output matrix file")->required();

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Synthesize a circuit for a unitary");
  synth->add_option("input", synth_args.in, "Matrix file")->required();
  synth->add_option("-o,--out", synth_args.qasm, "Output QASM file")->required();
  synth->add_option("-r,--report", synth_args.report, "JSON report file (stdout if absent)");
  synth->add_option("--block-size", synth_args.opts.block_size, "Panel width nb")
      ->check(CLI::PositiveNumber);
  synth->add_option("--nx", synth_args.opts.crossover, "Unblocked crossover order")
      ->check(CLI::NonNegativeNumber);
  synth->add_flag("--no-merge", synth_args.no_merge, "Keep block diagonals separate");
  synth->add_flag("--no-cancel-x", synth_args.no_cancel_x, "Keep X layer pairs");
  synth->add_flag("--verify", synth_args.opts.verify, "Simulate and compare with the input");
  synth->add_flag("--force-verify", synth_args.force_verify, "Allow verification above 7 qubits");
  synth->add_option("--tol", synth_args.opts.tolerance, "Frobenius residual tolerance")
      ->check(CLI::PositiveNumber);
  synth->add_option("--threads", synth_args.opts.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a circuit against a matrix");
  verify->add_option("matrix", verify_args.matrix, "Matrix file")->required();
  verify->add_option("qasm", verify_args.qasm, "QASM file");
  verify->add_option("--tol", verify_args.tol, "Tolerance")->check(CLI::PositiveNumber);
  verify->add_flag("--self-unitary", verify_args.self_unitary, "Only check that the matrix is unitary");
  verify->add_flag("--force-verify", verify_args.force_verify, "Allow verification above 7 qubits");
  verify->add_option("--threads", verify_args.threads, "Worker threads")->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time factorizations and synthesis");
  bench->add_option("--min", bench_args.min_qubits, "Smallest qubit count")
      ->check(CLI::Range(1, hqs::kMaxBenchQubits));
  bench->add_option("--max", bench_args.max_qubits, "Largest qubit count")
      ->check(CLI::Range(1, hqs::kMaxBenchQubits));
  bench->add_option("--modes", bench_args.modes, "modified-qr, generic-qr, full-synth")
      ->delimiter(',');
  bench->add_option("--seeds", bench_args.seeds, "Seeds")->delimiter(',');
  bench->add_option("-o,--out", bench_args.out, "CSV file (stdout if absent)");
  bench->add_flag("--append", bench_args.append, "Append to an existing CSV");
  bench->add_option("--threads", bench_args.threads, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--block-size", bench_args.block_size, "Panel width nb")
      ->check(CLI::PositiveNumber);
  bench->add_option("--nx", bench_args.crossover, "Unblocked crossover order")
      ->check(CLI::NonNegativeNumber);

  int counts_n = 1;
  auto* counts = app.add_subcommand("counts", "Print leading-order gate counts");
  counts->add_option("n", counts_n, "Qubit count")->required()->check(CLI::Range(1, 30));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*random) return cmd_random(random_args);
    if (*synth) return cmd_synth(synth_args);
    if (*verify) return cmd_verify(verify_args);
    if (*bench) return cmd_bench(bench_args);
    if (*counts) return cmd_counts(counts_n);
  } catch (const hqs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const hqs::NotUnitaryError& e) {
    std::cerr << "not unitary: " << e.what() << '\n';
    return kExitNotUnitary;
  } catch (const hqs::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
