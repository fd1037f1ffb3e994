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


#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include "spooky/errors.hpp"
#include "spooky/random_states.hpp"
#include "spooky/report.hpp"
#include "spooky/worked_examples.hpp"
#include "test_support.hpp"

using namespace spooky;
using spooky::testing::close;

namespace {

// "key: value" lines at the top level of a text rendering.
std::map<std::string, std::string> top_level_lines(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == ' ' || line[0] == '-') continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    out[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return out;
}

std::string six_digits(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

TEST_CASE("analysis of the worked entangled state") {
  const auto r = analyze(worked::entangled_2x2());
  CHECK_FALSE(r.factorized);
  CHECK(r.schmidt_index == 2);
  CHECK(close(r.entanglement_number, 2.0 * std::sqrt(2.0) / 5.0, 1e-12));
  CHECK(close(r.entanglement_number_trace, 2.0 * std::sqrt(2.0) / 5.0, 1e-12));
  CHECK(r.route_difference == std::abs(r.entanglement_number - r.entanglement_number_trace));
  CHECK(close(r.trace_fourth_power, 17.0 / 25.0, 1e-12));
  CHECK_FALSE(r.local_left.has_value());
  CHECK(r.factor_tolerance == 1e-9);
  CHECK(r.rank_tolerance == 1e-10);
}

TEST_CASE("analysis of a product state carries local parts") {
  const auto r = analyze(worked::product_3x3());
  CHECK(r.factorized);
  REQUIRE(r.local_left.has_value());
  REQUIRE(r.local_right.has_value());
  CHECK(r.local_left->size() == 3);
  CHECK(r.schmidt_index == 1);
  CHECK(r.entanglement_number <= 1e-12);
}

TEST_CASE("machine output round-trips through the parser") {
  RandomStates rng(501);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = rng.uniform(1, 5);
    const std::size_t n = rng.uniform(1, 5);
    const auto gamma = trial % 3 == 0 ? rng.product(m, n) : rng.bipartite(m, n);
    const auto emitted = emit_machine(to_json(analyze(gamma)));
    const auto parsed = report_from_json(Document::parse(emitted));
    CHECK(emit_machine(to_json(parsed)) == emitted);
    // Once rounded, the values are a fixed point of the round trip.
    CHECK(report_from_json(Document::parse(emit_machine(to_json(parsed)))) == parsed);
  }
}

TEST_CASE("text rendering shows the machine values at six digits") {
  const auto doc = round_numbers(to_json(analyze(worked::symmetric_2x2())));
  const auto lines = top_level_lines(render_text(doc));
  for (const char* key : {"entanglement_number", "entanglement_number_trace",
                          "trace_fourth_power", "upper_bound", "factor_residual"}) {
    CAPTURE(key);
    REQUIRE(lines.count(key) == 1);
    CHECK(lines.at(key) == six_digits(doc[key].get<double>()));
  }
  CHECK(lines.at("verdict") == "entangled");
  CHECK(lines.at("schmidt_index") == "2");
}

TEST_CASE("machine numbers carry twelve significant digits") {
  const auto doc = Document::parse(emit_machine(to_json(analyze(worked::symmetric_2x2()))));
  CHECK(doc["entanglement_number"].get<double>() == std::stod("0.235702260396"));
}

TEST_CASE("missing or malformed keys are rejected") {
  auto doc = to_json(analyze(worked::entangled_2x2()));
  for (const char* key : {"verdict", "entanglement_number", "tolerances", "dims",
                          "coefficient_sum", "distribution"}) {
    CAPTURE(key);
    auto broken = doc;
    broken.erase(key);
    CHECK_THROWS_AS(report_from_json(broken), ParseError);
  }
  auto wrong = doc;
  wrong["verdict"] = "maybe";
  CHECK_THROWS_AS(report_from_json(wrong), ParseError);
  wrong = doc;
  wrong["entanglement_number"] = "high";
  CHECK_THROWS_AS(report_from_json(wrong), ParseError);
}

TEST_CASE("complex JSON helpers") {
  const ComplexScalar z{0.25, -1.5};
  CHECK(complex_from_json(complex_to_json(z)) == z);
  CHECK_THROWS_AS(complex_from_json(Document::parse("[1, 2]")), ParseError);
  const std::vector<ComplexScalar> v{{1.0, 0.0}, {0.0, -1.0}};
  CHECK(complex_vector_from_json(complex_vector_to_json(v)) == v);
}

TEST_CASE("round_numbers leaves integers and strings alone") {
  Document doc = {{"n", 7}, {"s", "x"}, {"f", 0.1234567890123456}};
  const auto r = round_numbers(doc, 3);
  CHECK(r["n"] == 7);
  CHECK(r["s"] == "x");
  CHECK(r["f"].get<double>() == 0.123);
}
