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

#include "hqsynth/qasm.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <regex>
#include <string>

#include "hqsynth/errors.hpp"

namespace hqs {
namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view qasm_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::PHASE: return "u1";
    case GateKind::X: return "x";
    case GateKind::CNOT: return "cx";
  }
  return "?";
}

std::optional<GateKind> kind_from_name(std::string_view name) {
  if (name == "rx") return GateKind::RX;
  if (name == "ry") return GateKind::RY;
  if (name == "rz") return GateKind::RZ;
  if (name == "u1") return GateKind::PHASE;
  if (name == "x") return GateKind::X;
  if (name == "cx") return GateKind::CNOT;
  return std::nullopt;
}

double parse_angle(const std::string& text, std::size_t line_no) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw ParseError("line " + std::to_string(line_no) + ": bad angle '" + text + "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void export_qasm(const QuantumCircuit& c, std::ostream& out) {
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n";
  if (c.global_phase() != 0.0) out << "// global_phase: " << number(c.global_phase()) << '\n';
  out << "qreg q[" << c.n_qubits() << "];\n";
  std::string line;
  for (const auto& g : c.gates()) {
    line.assign(qasm_name(g.kind));
    if (g.is_rotation()) line += '(' + number(g.angle) + ')';
    line += ' ';
    if (g.kind == GateKind::CNOT) line += "q[" + std::to_string(g.control) + "],";
    line += "q[" + std::to_string(g.target) + "];\n";
    out << line;
  }
  if (!out) throw Error("failed to write QASM");
}

void export_qasm(const QuantumCircuit& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  export_qasm(c, out);
}

QuantumCircuit parse_qasm(std::istream& in) {
  static const std::regex kQreg(R"(qreg\s+q\s*\[\s*(\d+)\s*\]\s*;)");
  static const std::regex kGate(
      R"(([a-z0-9]+)\s*(?:\(\s*([^)\s]+)\s*\))?\s+q\s*\[\s*(\d+)\s*\]\s*(?:,\s*q\s*\[\s*(\d+)\s*\]\s*)?;)");
  static const std::regex kPhase(R"(//\s*global_phase:\s*(\S+))");

  std::optional<QuantumCircuit> circuit;
  double phase = 0.0;
  bool saw_header = false;
  std::string raw;
  std::size_t line_no = 0;
  std::smatch m;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (std::regex_match(line, m, kPhase)) {
      phase = parse_angle(m[1], line_no);
      continue;
    }
    if (line.starts_with("//")) continue;
    if (!saw_header) {
      if (line != "OPENQASM 2.0;") throw ParseError("missing 'OPENQASM 2.0;' header");
      saw_header = true;
      continue;
    }
    if (line.starts_with("include ")) continue;
    if (std::regex_match(line, m, kQreg)) {
      if (circuit) throw ParseError("line " + std::to_string(line_no) + ": second qreg");
      const int n = std::stoi(m[1]);
      if (n < 1 || n > 30) throw ParseError("unsupported register size");
      circuit.emplace(n);
      continue;
    }
    if (!std::regex_match(line, m, kGate)) {
      throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    }
    if (!circuit) throw ParseError("gate before qreg declaration");
    const auto kind = kind_from_name(m.str(1));
    if (!kind) throw ParseError("line " + std::to_string(line_no) + ": unsupported gate '" + m.str(1) + "'");
    const bool has_angle = m[2].matched;
    const bool two_qubit = m[4].matched;
    Gate g;
    g.kind = *kind;
    const bool rotation = g.is_rotation();
    if (has_angle != rotation || two_qubit != (g.kind == GateKind::CNOT)) {
      throw ParseError("line " + std::to_string(line_no) + ": wrong operands for " + m.str(1));
    }
    if (rotation) g.angle = parse_angle(m[2], line_no);
    if (two_qubit) {
      g.control = std::stoi(m[3]);
      g.target = std::stoi(m[4]);
    } else {
      g.target = std::stoi(m[3]);
    }
    try {
      circuit->append(g);
    } catch (const PreconditionError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!circuit) throw ParseError("no qreg declaration");
  circuit->set_global_phase(phase);
  return std::move(*circuit);
}

QuantumCircuit parse_qasm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return parse_qasm(in);
}

}  // namespace hqs
