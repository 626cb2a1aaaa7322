// Copyright 2026 The t-rot-opt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TROT_ERRORS_H
#define TROT_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trot {

/// A `.qc` input could not be parsed. `line()` is 1-based; 0 means no line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string &message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A gate kind was handed to a routine that cannot process it.
class UnsupportedGateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A set of commuting Paulis has a nonempty subset multiplying to +-I, so no
/// Clifford maps it onto distinct single-qubit Z operators.
class DependentSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace trot

#endif
