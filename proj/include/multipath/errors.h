// Copyright 2026 The Authors.
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

#ifndef MULTIPATH_ERRORS_H_
#define MULTIPATH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace multipath {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element label outside the ground set.
class InvalidElementError : public Error {
 public:
  using Error::Error;
};

// An argument outside the mathematical domain of an operation (empty
// subset, non-basis where a basis is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Condition (C) fails, so no antichain can be extracted by trimming.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// The requested minor does not exist at diagram level (e.g. deleting an
// isthmus).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked to run above its size guard.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Polynomial arithmetic left the declared coefficient box.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A computation graph breaks one of its structural rules.
class GraphInvariantError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace multipath

#endif  // MULTIPATH_ERRORS_H_
