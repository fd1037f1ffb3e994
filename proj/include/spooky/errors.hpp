// Copyright 2026 The spooky Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spooky {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

class NotAProjection : public Error {
 public:
  using Error::Error;
};

/// A vector or coefficient matrix whose squared norm is not 1.
class NotNormalized : public Error {
 public:
  using Error::Error;
};

/// Conditioning on an event that has (numerically) zero probability.
class ZeroProbabilityEvent : public Error {
 public:
  using Error::Error;
};

class NonOrthogonalInput : public Error {
 public:
  using Error::Error;
};

/// Malformed state file or complex literal. `line()` is 1-based, 0 if unknown.
/// The message reads "source:line: detail" with absent parts left out.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail,
             const std::string& source = "")
      : Error(compose(line, detail, source)),
        line_(line),
        detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string compose(std::size_t line, const std::string& detail,
                             const std::string& source) {
    std::string prefix = source;
    if (line != 0) {
      prefix += (prefix.empty() ? "line " : ":") + std::to_string(line);
    }
    return prefix.empty() ? detail : prefix + ": " + detail;
  }

  std::size_t line_;
  std::string detail_;
};

}  // namespace spooky
