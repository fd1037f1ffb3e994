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
#include <cstdint>
#include <string_view>
#include <vector>

#include "spooky/report.hpp"

namespace spooky {

struct DemoOptions {
  /// Seed for the randomized cases (random orthonormal pairs, events).
  std::uint64_t seed = 20190101;
  /// Dimension of each subsystem in the randomized cases.
  std::size_t dim = 2;
};

/// example1 ... example7, action-at-a-distance.
const std::vector<std::string_view>& demo_names();

/// Recomputes one worked example from built-in data. The document lists
/// every check as {name, expected, computed, tolerance, pass} and carries an
/// overall "pass". `name == "all"` runs every demo.
///
/// Throws InvalidArgument for an unknown name or a dimension below 2.
Document run_demo(std::string_view name, const DemoOptions& options = {});

}  // namespace spooky
