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

#include "spooky/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "spooky/errors.hpp"
#include "spooky/state_file.hpp"

namespace spooky {
namespace {

std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

bool is_complex(const Document& j) {
  return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im") &&
         j["re"].is_number() && j["im"].is_number();
}

std::string render_scalar(const Document& j) {
  if (j.is_null()) return "-";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_number(j.get<double>(), kTextDigits);
  if (j.is_number()) return j.dump();
  if (is_complex(j)) {
    const double re = std::stod(format_number(j["re"].get<double>(), kTextDigits));
    const double im = std::stod(format_number(j["im"].get<double>(), kTextDigits));
    return format_complex({re, im});
  }
  return j.dump();
}

bool is_inline(const Document& j) {
  if (!j.is_array()) return !j.is_object() || is_complex(j);
  for (const auto& e : j) {
    if (!(e.is_primitive() || is_complex(e))) return false;
  }
  return true;
}

std::string render_inline(const Document& j) {
  if (!j.is_array()) return render_scalar(j);
  std::string out = "[";
  bool first = true;
  for (const auto& e : j) {
    if (!first) out += ", ";
    first = false;
    out += render_scalar(e);
  }
  return out + "]";
}

void render(const Document& j, int indent, std::ostringstream& out);

void render_object(const Document& obj, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : obj.items()) {
    if (is_inline(value)) {
      out << pad << key << ": " << render_inline(value) << '\n';
    } else {
      out << pad << key << ":\n";
      render(value, indent + 2, out);
    }
  }
}

void render(const Document& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    render_object(j, indent, out);
    return;
  }
  if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object() && !is_complex(e)) {
        bool all_inline = true;
        for (const auto& [k, v] : e.items()) all_inline = all_inline && is_inline(v);
        if (all_inline) {
          out << pad << "-";
          for (const auto& [k, v] : e.items()) out << ' ' << k << '=' << render_inline(v);
          out << '\n';
        } else {
          out << pad << "-\n";
          render_object(e, indent + 2, out);
        }
      } else if (is_inline(e)) {
        out << pad << "- " << render_inline(e) << '\n';
      } else {
        out << pad << "-\n";
        render(e, indent + 2, out);
      }
    }
    return;
  }
  out << pad << render_scalar(j) << '\n';
}

template <typename T>
T require(const Document& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(0, std::string("report is missing '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(0, std::string("report field '") + key + "' has the wrong type");
  }
}

std::optional<std::vector<ComplexScalar>> optional_vector(const Document& doc,
                                                          const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  return complex_vector_from_json(doc.at(key));
}

}  // namespace

AnalysisReport analyze(const BipartiteState& gamma, const Tolerances& tol) {
  const auto verdict = factor_test(gamma, tol);
  const auto schmidt = schmidt_decompose(gamma, tol);
  const auto by_schmidt = entanglement_number_schmidt(schmidt);
  const auto by_trace = entanglement_number_trace(gamma);

  AnalysisReport r;
  r.dim_left = gamma.dim_left();
  r.dim_right = gamma.dim_right();
  r.factorized = verdict.factorized;
  r.factor_path = std::string(to_string(verdict.path));
  r.coefficient_sum = verdict.coefficient_sum;
  r.factor_residual = verdict.max_residual;
  r.factor_threshold = verdict.residual_threshold;
  if (verdict.local_left) {
    const auto a = verdict.local_left->amplitudes();
    const auto b = verdict.local_right->amplitudes();
    r.local_left.emplace(a.begin(), a.end());
    r.local_right.emplace(b.begin(), b.end());
  }
  r.schmidt_index = schmidt.index();
  r.schmidt_coefficients = schmidt.coefficients;
  r.distribution = by_schmidt.distribution;
  r.entanglement_number = by_schmidt.entanglement_number;
  r.entanglement_number_trace = by_trace.entanglement_number;
  r.route_difference =
      std::abs(by_schmidt.entanglement_number - by_trace.entanglement_number);
  r.trace_fourth_power = by_trace.trace_fourth_power;
  r.upper_bound = by_schmidt.upper_bound.value_or(0.0);
  r.maximal = by_schmidt.maximal.value_or(false);
  r.form_discrepancy = by_schmidt.form_discrepancy.value_or(0.0);
  r.factor_tolerance = tol.factor_residual;
  r.rank_tolerance = tol.rank;
  return r;
}

Document complex_to_json(ComplexScalar z) {
  Document j = Document::object();
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Document complex_vector_to_json(std::span<const ComplexScalar> v) {
  Document j = Document::array();
  for (const auto& z : v) j.push_back(complex_to_json(z));
  return j;
}

ComplexScalar complex_from_json(const Document& j) {
  if (!is_complex(j)) throw ParseError(0, "expected {\"re\", \"im\"} object");
  return {j["re"].get<double>(), j["im"].get<double>()};
}

std::vector<ComplexScalar> complex_vector_from_json(const Document& j) {
  if (!j.is_array()) throw ParseError(0, "expected an array of complex numbers");
  std::vector<ComplexScalar> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

Document to_json(const AnalysisReport& r) {
  Document doc = Document::object();
  doc["dims"] = {r.dim_left, r.dim_right};
  doc["verdict"] = r.factorized ? "factorized" : "entangled";
  doc["factor_path"] = r.factor_path;
  doc["coefficient_sum"] = complex_to_json(r.coefficient_sum);
  doc["factor_residual"] = r.factor_residual;
  doc["factor_threshold"] = r.factor_threshold;
  doc["local_left"] = r.local_left ? complex_vector_to_json(*r.local_left) : Document();
  doc["local_right"] = r.local_right ? complex_vector_to_json(*r.local_right) : Document();
  doc["schmidt_index"] = r.schmidt_index;
  doc["schmidt_coefficients"] = r.schmidt_coefficients;
  doc["distribution"] = r.distribution;
  doc["entanglement_number"] = r.entanglement_number;
  doc["entanglement_number_trace"] = r.entanglement_number_trace;
  doc["route_difference"] = r.route_difference;
  doc["trace_fourth_power"] = r.trace_fourth_power;
  doc["upper_bound"] = r.upper_bound;
  doc["maximal"] = r.maximal;
  doc["form_discrepancy"] = r.form_discrepancy;
  doc["tolerances"] = {{"factor_residual", r.factor_tolerance},
                       {"rank", r.rank_tolerance}};
  return doc;
}

AnalysisReport report_from_json(const Document& doc) {
  if (!doc.is_object()) throw ParseError(0, "report must be an object");
  AnalysisReport r;
  const auto dims = require<std::vector<std::size_t>>(doc, "dims");
  if (dims.size() != 2) throw ParseError(0, "report 'dims' must have two entries");
  r.dim_left = dims[0];
  r.dim_right = dims[1];
  const auto verdict = require<std::string>(doc, "verdict");
  if (verdict != "factorized" && verdict != "entangled") {
    throw ParseError(0, "unknown verdict '" + verdict + "'");
  }
  r.factorized = verdict == "factorized";
  r.factor_path = require<std::string>(doc, "factor_path");
  if (!doc.contains("coefficient_sum")) throw ParseError(0, "report is missing 'coefficient_sum'");
  r.coefficient_sum = complex_from_json(doc["coefficient_sum"]);
  r.factor_residual = require<double>(doc, "factor_residual");
  r.factor_threshold = require<double>(doc, "factor_threshold");
  r.local_left = optional_vector(doc, "local_left");
  r.local_right = optional_vector(doc, "local_right");
  r.schmidt_index = require<std::size_t>(doc, "schmidt_index");
  r.schmidt_coefficients = require<std::vector<double>>(doc, "schmidt_coefficients");
  r.distribution = require<std::vector<double>>(doc, "distribution");
  r.entanglement_number = require<double>(doc, "entanglement_number");
  r.entanglement_number_trace = require<double>(doc, "entanglement_number_trace");
  r.route_difference = require<double>(doc, "route_difference");
  r.trace_fourth_power = require<double>(doc, "trace_fourth_power");
  r.upper_bound = require<double>(doc, "upper_bound");
  r.maximal = require<bool>(doc, "maximal");
  r.form_discrepancy = require<double>(doc, "form_discrepancy");
  if (!doc.contains("tolerances")) throw ParseError(0, "report is missing 'tolerances'");
  r.factor_tolerance = require<double>(doc["tolerances"], "factor_residual");
  r.rank_tolerance = require<double>(doc["tolerances"], "rank");
  return r;
}

Document round_numbers(Document doc, int digits) {
  if (doc.is_number_float()) {
    const double v = doc.get<double>();
    if (std::isfinite(v)) return std::stod(format_number(v, digits));
    return doc;
  }
  if (doc.is_structured()) {
    for (auto& e : doc) e = round_numbers(std::move(e), digits);
  }
  return doc;
}

std::string emit_machine(const Document& doc) {
  return round_numbers(doc).dump(2) + "\n";
}

std::string render_text(const Document& doc) {
  std::ostringstream out;
  render(round_numbers(doc), 0, out);
  return out.str();
}

}  // namespace spooky
