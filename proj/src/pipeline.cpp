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

#include "hqsynth/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "hqsynth/errors.hpp"
#include "hqsynth/simulator.hpp"

namespace hqs {
namespace {

constexpr int kMaxSynthesisQubits = 14;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::json counts_json(const GateCounts& c) {
  return {{"cnot", c.cnot}, {"rotation", c.rotation}, {"x", c.x}, {"total", c.total}};
}

int support_qubits(std::size_t support) {
  int k = 0;
  while ((std::size_t{1} << k) < support) ++k;
  return k;
}

// Emits the block layout one reflector at a time so that only two
// preparations are alive at once.
class LayoutBuilder {
 public:
  LayoutBuilder(int n, DiagonalPhases final_d, bool merge, double prune_tol)
      : n_(n),
        merge_(merge),
        prune_tol_(prune_tol),
        out_(n),
        grover_(synthesize_grover_diagonal(n)),
        final_d_(std::move(final_d)) {
    if (final_d_.n_qubits != n) throw ShapeError("final diagonal width differs from circuit");
    if (!merge_) append_diagonal(out_, final_d_, 0, prune_tol_);
  }

  void add(const ReflectorBlock& b) {
    const auto& p = b.prep;
    if (p.n_qubits != n_) throw ShapeError("reflector block width differs from circuit");
    const int offset = n_ - p.k;
    if (merge_) {
      if (!prev_) {
        // D followed by D_b^*, both diagonal, with the X layer moved after them.
        auto phases = final_d_.phases;
        const std::size_t mask = (std::size_t{1} << p.k) - 1;
        for (std::size_t j = 0; j < phases.size(); ++j) phases[j] -= p.d.phases[j & mask];
        append_diagonal(out_, DiagonalPhases(n_, std::move(phases)), 0, prune_tol_);
        append_x(p);
      } else {
        // ... Y_prev, X_prev, X_b, then D_prev D_b^* on the wider support.
        const auto& q = prev_->prep;
        if (q.k > p.k) throw PreconditionError("blocks must be given in emission order");
        append_x(q);
        append_x(p);
        const std::size_t mask = (std::size_t{1} << q.k) - 1;
        std::vector<double> phases(std::size_t{1} << p.k);
        for (std::size_t j = 0; j < phases.size(); ++j) {
          phases[j] = q.d.phases[j & mask] - p.d.phases[j];
        }
        append_diagonal(out_, DiagonalPhases(p.k, std::move(phases)), offset, prune_tol_);
      }
    } else {
      append_x(p);
      auto conj = p.d;
      for (auto& ph : conj.phases) ph = -ph;
      append_diagonal(out_, conj, offset, prune_tol_);
    }
    out_.append(inverse(p.y), offset);
    out_.append(grover_);
    out_.append(p.y, offset);
    if (merge_) {
      prev_ = &b;
    } else {
      append_diagonal(out_, p.d, offset, prune_tol_);
      append_x(p);
    }
  }

  // Blocks passed to add() must stay alive until the next add() or finish().
  QuantumCircuit finish() {
    if (merge_ && prev_) {
      const auto& q = prev_->prep;
      append_diagonal(out_, q.d, n_ - q.k, prune_tol_);
      append_x(q);
    } else if (merge_) {
      append_diagonal(out_, final_d_, 0, prune_tol_);
    }
    prev_ = nullptr;
    return std::move(out_);
  }

 private:
  void append_x(const PaddedPreparation& p) {
    for (const auto& g : p.x_layer) out_.append(g);
  }

  int n_;
  bool merge_;
  double prune_tol_;
  QuantumCircuit out_;
  QuantumCircuit grover_;
  DiagonalPhases final_d_;
  const ReflectorBlock* prev_ = nullptr;
};

}  // namespace

std::string to_json(const GateCounts& c) { return counts_json(c).dump(); }

std::string to_json(const SynthesisReport& r) {
  nlohmann::json j;
  j["n_qubits"] = r.n_qubits;
  j["blocks"] = r.blocks;
  j["counts"] = counts_json(r.counts);
  j["predicted"] = counts_json(r.predicted);
  j["flops"] = {{"mul", r.flops.complex_mul}, {"add", r.flops.complex_add}};
  j["times_ms"] = {{"factorize", r.times.factorize_ms},
                   {"synthesize", r.times.synthesize_ms},
                   {"verify", r.times.verify_ms}};
  j["residual"] = r.residual ? nlohmann::json(*r.residual) : nlohmann::json(nullptr);
  return j.dump(2);
}

QuantumCircuit synthesize_grover_diagonal(int n_qubits) {
  if (n_qubits < 1) throw PreconditionError("synthesize_grover_diagonal: n must be positive");
  auto d = DiagonalPhases::zeros(n_qubits);
  d.phases[0] = std::numbers::pi;
  return synthesize_diagonal(d);
}

GateCounts predicted_gate_counts(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw PreconditionError("predicted_gate_counts: n out of range");
  GateCounts c;
  c.cnot = std::uint64_t{2} << (2 * n_qubits);
  c.rotation = c.cnot;
  c.total = c.cnot + c.rotation;
  return c;
}

ReflectorBlock make_reflector_block(const UnitaryFactorization& f, std::size_t index,
                                    double prune_tol) {
  const std::size_t dim = f.dim();
  if (index < 1 || index >= dim) throw PreconditionError("reflector index out of range");
  ReflectorBlock b;
  b.index = index;
  b.u = f.householder_vector(index - 1);
  double norm2 = 0.0;
  for (const auto& x : b.u) norm2 += std::norm(x);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : b.u) x *= inv;
  b.k = support_qubits(dim - index + 1);
  b.prep = padded_prepare(b.u, b.k, prune_tol);
  return b;
}

QuantumCircuit merge_adjacent_diagonals(const std::vector<ReflectorBlock>& blocks,
                                        const DiagonalPhases& final_d, bool merge,
                                        double prune_tol) {
  LayoutBuilder builder(final_d.n_qubits, final_d, merge, prune_tol);
  for (const auto& b : blocks) builder.add(b);
  return builder.finish();
}

QuantumCircuit cancel_x_layers(const QuantumCircuit& c) {
  const auto& gates = c.gates();
  std::vector<bool> removed(gates.size(), false);
  // Per wire: indices of surviving gates on that wire, most recent last.
  std::vector<std::vector<std::size_t>> wire(static_cast<std::size_t>(c.n_qubits()));
  for (std::size_t idx = 0; idx < gates.size(); ++idx) {
    const Gate& g = gates[idx];
    auto& w = wire[static_cast<std::size_t>(g.target)];
    if (g.kind == GateKind::X && !w.empty() && gates[w.back()].kind == GateKind::X) {
      removed[w.back()] = true;
      removed[idx] = true;
      w.pop_back();
      continue;
    }
    w.push_back(idx);
    if (g.kind == GateKind::CNOT) wire[static_cast<std::size_t>(g.control)].push_back(idx);
  }
  std::vector<Gate> kept;
  kept.reserve(gates.size());
  for (std::size_t idx = 0; idx < gates.size(); ++idx) {
    if (!removed[idx]) kept.push_back(gates[idx]);
  }
  QuantumCircuit out(c.n_qubits());
  out.assign_gates(std::move(kept));
  out.set_global_phase(c.global_phase());
  return out;
}

bool attach_verification(const ComplexMatrix& u, const QuantumCircuit& c,
                         const SynthesisOptions& opts, SynthesisReport& report) {
  if (c.n_qubits() > opts.max_verify_qubits) {
    throw SizeError("verification of " + std::to_string(c.n_qubits()) +
                    " qubits exceeds the limit of " + std::to_string(opts.max_verify_qubits));
  }
  const auto t0 = Clock::now();
  const auto v = verify_synthesis(u, c, opts.tolerance, c.n_qubits(), opts.threads);
  report.times.verify_ms = ms_since(t0);
  report.residual = v.residual;
  return v.ok;
}

SynthesisResult synthesize_unitary(const ComplexMatrix& u, const SynthesisOptions& opts) {
  if (!(opts.tolerance > 0.0)) throw PreconditionError("tolerance must be positive");
  const int n = log2_exact(u.dim());
  if (n < 1 || n > kMaxSynthesisQubits) {
    throw SizeError("synthesis needs a 2^n x 2^n matrix with 1 <= n <= " +
                    std::to_string(kMaxSynthesisQubits) + ", got dimension " +
                    std::to_string(u.dim()));
  }
  if (opts.verify && n > opts.max_verify_qubits) {
    throw SizeError("verification of " + std::to_string(n) + " qubits exceeds the limit of " +
                    std::to_string(opts.max_verify_qubits));
  }

  SynthesisReport report;
  report.n_qubits = n;
  report.predicted = predicted_gate_counts(n);

  auto t0 = Clock::now();
  BlockingParams params;
  params.block_size = opts.block_size;
  params.crossover = opts.crossover;
  params.threads = opts.threads;
  const auto f = factorize_blocked(u, params, report.flops);
  report.times.factorize_ms = ms_since(t0);

  t0 = Clock::now();
  const std::size_t dim = u.dim();
  LayoutBuilder builder(n, DiagonalPhases(n, f.phases), opts.merge_diagonals, opts.prune_tol);
  // The builder keeps a pointer to the last block, so alternate two slots.
  ReflectorBlock slots[2];
  for (std::size_t i = dim - 1; i >= 1; --i) {
    auto& slot = slots[i & 1];
    slot = make_reflector_block(f, i, opts.prune_tol);
    builder.add(slot);
  }
  QuantumCircuit circuit = builder.finish();
  if (opts.cancel_x_layers) circuit = cancel_x_layers(circuit);
  report.blocks = dim - 1;
  report.times.synthesize_ms = ms_since(t0);
  report.counts = gate_counts(circuit);

  if (opts.verify && !attach_verification(u, circuit, opts, report)) {
    throw VerificationError("synthesized circuit misses the target: residual " +
                                std::to_string(*report.residual) + " > tolerance " +
                                std::to_string(opts.tolerance),
                            *report.residual);
  }
  return {std::move(circuit), std::move(report)};
}

}  // namespace hqs
