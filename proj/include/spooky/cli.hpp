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

#include <ostream>
#include <string>
#include <vector>

namespace spooky {

/// Exit codes shared by every file command.
inline constexpr int kExitFactorized = 0;
inline constexpr int kExitEntangled = 1;
inline constexpr int kExitError = 2;

/// Entry point of the `spooky` tool. `args` excludes the program name.
/// File commands return kExitFactorized / kExitEntangled, `demo` returns 0
/// when every check passes and 1 otherwise; any failure returns kExitError
/// with a diagnostic on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace spooky
