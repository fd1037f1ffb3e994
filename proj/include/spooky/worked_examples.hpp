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

#include <array>

#include "spooky/quantum_state.hpp"

namespace spooky::worked {

/// 3x3 state with raw coefficients 4, -3i, 5 / -8, 6i, -10 / 12, -9i, 15
/// over the norm 10 sqrt(7).
BipartiteState product_3x3();
/// (1/sqrt 10) [[1, -2i], [1, -2i]].
BipartiteState product_2x2();
/// (1/sqrt 10) [[1, -2i], [1, 2i]].
BipartiteState entangled_2x2();
/// (1/(2 sqrt 3)) [[3, 1], [1, 1]].
BipartiteState symmetric_2x2();
/// Diagonal states with Schmidt distributions (1/2, 1/2), (1/3, 1/3, 1/3),
/// (1/2, 1/3, 1/6) and (1/9, 1/9, 7/9), in that order.
std::array<BipartiteState, 4> diagonal_family();
/// diag(sqrt(99)/10, 1/10).
BipartiteState peaked();

}  // namespace spooky::worked
