// Copyright 2026 The Fluctum Authors
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

namespace fluctum {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes are incompatible.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An input violates a documented precondition (not Hermitian, not a
// distribution, not unitary, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A scalar parameter is outside its admissible range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Square root or similar requested of a matrix with a substantially
// negative eigenvalue.
class NotPositiveError : public Error {
 public:
  using Error::Error;
};

// An iterative routine failed to converge or a construction exhausted its
// retries.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Operation is not defined for this input (non-square channel for Choi,
// beta = 0 for a free energy, degenerate ground state, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (JSON literal, scenario file).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fluctum
