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

#include <filesystem>
#include <iosfwd>

#include "hqsynth/circuit.hpp"

namespace hqs {

/// OpenQASM 2.0 text. PHASE is written as u1, CNOT as cx; the global phase
/// goes into a "// global_phase: <radians>" comment when nonzero. Angles use 17
/// significant digits so that re-reading is lossless.
void export_qasm(const QuantumCircuit& c, std::ostream& out);
void export_qasm(const QuantumCircuit& c, const std::filesystem::path& path);

/// Reads back the subset written by export_qasm (one register, the six
/// gate names above, numeric angles, optional global-phase comment).
/// Throws ParseError on anything else.
QuantumCircuit parse_qasm(std::istream& in);
QuantumCircuit parse_qasm(const std::filesystem::path& path);

}  // namespace hqs
