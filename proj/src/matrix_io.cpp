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

#include "hqsynth/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hqsynth/errors.hpp"

namespace hqs {
namespace {

void append_number(std::string& out, double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  out.append(buf, static_cast<std::size_t>(len));
}

double parse_double(std::string_view text, std::size_t row, std::size_t col) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw ParseError("bad number '" + std::string(text) + "' at entry (" +
                     std::to_string(row) + ", " + std::to_string(col) + ")");
  }
  return value;
}

}  // namespace

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::string line;
  out << n << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    line.clear();
    for (std::size_t c = 0; c < n; ++c) {
      if (c) line += ' ';
      append_number(line, m(r, c).real());
      line += ',';
      append_number(line, m(r, c).imag());
    }
    line += '\n';
    out << line;
  }
  if (!out) throw Error("failed to write matrix");
}

void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_matrix(out, m);
}

ComplexMatrix read_matrix(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("missing dimension line");
  std::size_t dim = 0;
  {
    std::istringstream hs(header);
    std::string extra;
    if (!(hs >> dim) || (hs >> extra) || dim == 0) {
      throw ParseError("first line must be a positive integer dimension");
    }
  }
  if (dim > (std::size_t{1} << 16)) throw ParseError("dimension too large");

  ComplexMatrix m(dim);
  std::string line;
  for (std::size_t r = 0; r < dim; ++r) {
    if (!std::getline(in, line)) {
      throw ParseError("expected " + std::to_string(dim) + " rows, got " +
                       std::to_string(r));
    }
    std::istringstream ls(line);
    std::string token;
    std::size_t c = 0;
    while (ls >> token) {
      if (c >= dim) throw ParseError("row " + std::to_string(r) + " has too many entries");
      const auto comma = token.find(',');
      if (comma == std::string::npos) {
        throw ParseError("entry '" + token + "' is not a re,im pair");
      }
      const std::string_view tv(token);
      m(r, c) = {parse_double(tv.substr(0, comma), r, c),
                 parse_double(tv.substr(comma + 1), r, c)};
      ++c;
    }
    if (c != dim) {
      throw ParseError("row " + std::to_string(r) + " has " + std::to_string(c) +
                       " entries, expected " + std::to_string(dim));
    }
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("trailing data after matrix rows");
    }
  }
  return m;
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return read_matrix(in);
}

}  // namespace hqs
