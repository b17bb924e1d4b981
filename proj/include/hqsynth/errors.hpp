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

#include <stdexcept>
#include <string>

namespace hqs {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A requested size is outside the supported range or memory budget.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition (e.g. it is not unitary).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input was expected to be unitary and is not.
class NotUnitaryError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Accumulated rounding broke an invariant the algorithm relies on.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix or circuit text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A synthesized circuit does not reproduce its target matrix.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace hqs
