// Copyright 2026 The kdiverse Authors
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

#ifndef KDIVERSE_ERRORS_H_
#define KDIVERSE_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kdiverse {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent caller input (bad poset, bad map, bad table...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Demands of a flow problem cannot be met.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A solver invariant failed. Never expected on well-formed input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Conflicting run options (e.g. a table measure with the cut backend).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration was asked to scan an instance past its guard.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// Input file could not be parsed; `line()` is 1-based, 0 when unknown.
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

// Overflow-checked 64-bit arithmetic. Throws InvalidArgumentError naming
// `what` on overflow.
int64_t CheckedAdd(int64_t a, int64_t b, const char* what);
int64_t CheckedMul(int64_t a, int64_t b, const char* what);

}  // namespace kdiverse

#endif  // KDIVERSE_ERRORS_H_
