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

// Matrix text format:
//
//   <dim>
//   re,im re,im ... re,im      <- row 0: entries (0,0) .. (0,dim-1)
//   ...
//   re,im re,im ... re,im      <- row dim-1
//
// Numbers are written with 17 significant digits so that a write/read
// round trip is bit-exact.

#pragma once

#include <filesystem>
#include <iosfwd>

#include "hqsynth/linalg.hpp"

namespace hqs {

void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

/// Throws ParseError on malformed input.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix(const std::filesystem::path& path);

}  // namespace hqs
