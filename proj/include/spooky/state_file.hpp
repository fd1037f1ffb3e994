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
#include <filesystem>
#include <string>
#include <string_view>

#include "spooky/complex_matrix.hpp"
#include "spooky/quantum_state.hpp"

namespace spooky {

/// Parses `a+bi`, `a-bi`, `bi`, `a`, `i`, `-i` with optional exponents.
/// Throws ParseError (line 0) on anything else, including inf and nan.
ComplexScalar parse_complex(std::string_view literal);

/// Shortest literal that parses back to exactly `z`.
std::string format_complex(ComplexScalar z);

enum class StateLayout { dense, sparse };

/// A state file as written, before the unit-norm check.
///
///   dims <m> <n>
///   normalize            (optional)
///   dense                followed by m rows of n complex literals
///   sparse               followed by `<i> <j> <complex>` lines, 1-based
///
/// `#` starts a comment; blank lines are ignored.
struct StateFile {
  std::size_t dim_left = 0;
  std::size_t dim_right = 0;
  bool normalize = false;
  StateLayout layout = StateLayout::dense;
  ComplexMatrix coefficients;
};

/// Syntax only. Throws ParseError with the offending line number.
StateFile parse_state_file_raw(std::string_view text);

/// Parses and validates. The coefficients are divided by their norm when the
/// file says `normalize` or `force_normalize` is set; otherwise they are kept
/// exactly as written and must already have unit norm.
BipartiteState parse_state_file(std::string_view text,
                                bool force_normalize = false);

/// Reads the file and calls parse_state_file. I/O failures throw Error.
BipartiteState load_state_file(const std::filesystem::path& path,
                               bool force_normalize = false);

std::string write_state_file(const BipartiteState& state,
                             StateLayout layout = StateLayout::dense);

}  // namespace spooky
