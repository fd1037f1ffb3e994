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

#include "spooky/worked_examples.hpp"

#include <cmath>

namespace spooky::worked {
namespace {

using namespace std::complex_literals;

BipartiteState diagonal(std::initializer_list<double> lambda) {
  ComplexMatrix c(lambda.size(), lambda.size());
  std::size_t k = 0;
  for (double l : lambda) {
    c(k, k) = std::sqrt(l);
    ++k;
  }
  return BipartiteState::normalized(std::move(c));
}

}  // namespace

BipartiteState product_3x3() {
  return BipartiteState::normalized(ComplexMatrix{
      {4.0, -3.0i, 5.0}, {-8.0, 6.0i, -10.0}, {12.0, -9.0i, 15.0}});
}

BipartiteState product_2x2() {
  return BipartiteState::normalized(ComplexMatrix{{1.0, -2.0i}, {1.0, -2.0i}});
}

BipartiteState entangled_2x2() {
  return BipartiteState::normalized(ComplexMatrix{{1.0, -2.0i}, {1.0, 2.0i}});
}

BipartiteState symmetric_2x2() {
  return BipartiteState::normalized(ComplexMatrix{{3.0, 1.0}, {1.0, 1.0}});
}

std::array<BipartiteState, 4> diagonal_family() {
  return {diagonal({1.0 / 2, 1.0 / 2}), diagonal({1.0 / 3, 1.0 / 3, 1.0 / 3}),
          diagonal({1.0 / 2, 1.0 / 3, 1.0 / 6}),
          diagonal({1.0 / 9, 1.0 / 9, 7.0 / 9})};
}

BipartiteState peaked() { return diagonal({99.0 / 100, 1.0 / 100}); }

}  // namespace spooky::worked
