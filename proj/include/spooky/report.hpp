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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "spooky/complex_matrix.hpp"
#include "spooky/entanglement.hpp"
#include "spooky/quantum_state.hpp"

namespace spooky {

/// Machine documents keep keys in insertion order.
using Document = nlohmann::ordered_json;

/// Everything `spooky analyze` reports about one state. Field names match the
/// keys of the machine-readable document (see README).
struct AnalysisReport {
  std::size_t dim_left = 0;
  std::size_t dim_right = 0;

  bool factorized = false;
  std::string factor_path;
  ComplexScalar coefficient_sum{};
  double factor_residual = 0.0;
  double factor_threshold = 0.0;
  std::optional<std::vector<ComplexScalar>> local_left;
  std::optional<std::vector<ComplexScalar>> local_right;

  std::size_t schmidt_index = 0;
  std::vector<double> schmidt_coefficients;
  std::vector<double> distribution;
  double entanglement_number = 0.0;
  double entanglement_number_trace = 0.0;
  double route_difference = 0.0;
  double trace_fourth_power = 0.0;
  double upper_bound = 0.0;
  bool maximal = false;
  double form_discrepancy = 0.0;

  double factor_tolerance = 0.0;
  double rank_tolerance = 0.0;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Runs the product criterion, the Schmidt decomposition and both
/// entanglement-number routes.
AnalysisReport analyze(const BipartiteState& gamma, const Tolerances& tol = {});

Document to_json(const AnalysisReport& report);
/// Inverse of to_json. Throws ParseError on missing or mistyped keys.
AnalysisReport report_from_json(const Document& doc);

Document complex_to_json(ComplexScalar z);
Document complex_vector_to_json(std::span<const ComplexScalar> v);
ComplexScalar complex_from_json(const Document& j);
std::vector<ComplexScalar> complex_vector_from_json(const Document& j);

/// Significant digits kept in the machine document and in text output.
inline constexpr int kMachineDigits = 12;
inline constexpr int kTextDigits = 6;

/// Rounds every floating-point number in `doc` to `digits` significant
/// digits.
Document round_numbers(Document doc, int digits = kMachineDigits);

/// Machine output: the rounded document, pretty-printed, newline-terminated.
std::string emit_machine(const Document& doc);

/// Human-readable rendering of a machine document. Numbers are shown with
/// kTextDigits significant digits; `{"re", "im"}` objects are shown as a+bi.
std::string render_text(const Document& doc);

}  // namespace spooky
