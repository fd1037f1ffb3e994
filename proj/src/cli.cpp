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

#include "spooky/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <optional>

#include "spooky/demo.hpp"
#include "spooky/entanglement.hpp"
#include "spooky/errors.hpp"
#include "spooky/report.hpp"
#include "spooky/state_file.hpp"

namespace spooky {
namespace {

struct GlobalOptions {
  std::string format = "text";
  double tolerance = Tolerances{}.factor_residual;
  double rank_tol = Tolerances{}.rank;
  bool normalize = false;

  Tolerances tolerances() const { return {tolerance, rank_tol}; }
};

struct Outcome {
  Document doc;
  int code = 0;
};

Document dims_of(const BipartiteState& s) {
  return {s.dim_left(), s.dim_right()};
}

Document states_to_json(const std::vector<StateVector>& states) {
  Document arr = Document::array();
  for (const auto& s : states) arr.push_back(complex_vector_to_json(s.amplitudes()));
  return arr;
}

int verdict_code(bool factorized) {
  return factorized ? kExitFactorized : kExitEntangled;
}

Outcome cmd_analyze(const BipartiteState& state, const GlobalOptions& g) {
  const auto report = analyze(state, g.tolerances());
  return {to_json(report), verdict_code(report.factorized)};
}

Outcome cmd_factor(const BipartiteState& state, const GlobalOptions& g) {
  const auto tol = g.tolerances();
  const auto v = factor_test(state, tol);
  Document doc = Document::object();
  doc["dims"] = dims_of(state);
  doc["verdict"] = v.factorized ? "factorized" : "entangled";
  doc["factor_path"] = to_string(v.path);
  doc["coefficient_sum"] = complex_to_json(v.coefficient_sum);
  doc["factor_residual"] = v.max_residual;
  doc["factor_threshold"] = v.residual_threshold;
  doc["local_left"] = v.local_left ? complex_vector_to_json(v.local_left->amplitudes()) : Document();
  doc["local_right"] = v.local_right ? complex_vector_to_json(v.local_right->amplitudes()) : Document();
  doc["tolerances"] = {{"factor_residual", tol.factor_residual}, {"rank", tol.rank}};
  return {doc, verdict_code(v.factorized)};
}

Outcome cmd_schmidt(const BipartiteState& state, const GlobalOptions& g) {
  const auto s = schmidt_decompose(state, g.tolerances());
  Document doc = Document::object();
  doc["dims"] = dims_of(state);
  doc["schmidt_index"] = s.index();
  doc["coefficients"] = s.coefficients;
  doc["distribution"] = s.distribution();
  doc["left_states"] = states_to_json(s.left_states);
  doc["right_states"] = states_to_json(s.right_states);
  doc["reconstruction_error"] =
      frobenius_norm(subtract(s.reconstruct(), state.coefficients()));
  doc["tolerances"] = {{"rank", g.rank_tol}};
  return {doc, verdict_code(s.index() == 1)};
}

Document schmidt_route_json(const EntanglementReport& r) {
  Document j = Document::object();
  j["entanglement_number"] = r.entanglement_number;
  j["schmidt_index"] = r.schmidt_index.value_or(0);
  j["distribution"] = r.distribution;
  j["trace_fourth_power"] = r.trace_fourth_power;
  j["upper_bound"] = r.upper_bound.value_or(0.0);
  j["maximal"] = r.maximal.value_or(false);
  j["form_discrepancy"] = r.form_discrepancy.value_or(0.0);
  return j;
}

Document trace_route_json(const EntanglementReport& r) {
  Document j = Document::object();
  j["entanglement_number"] = r.entanglement_number;
  j["trace_fourth_power"] = r.trace_fourth_power;
  j["factorized"] = r.factorized;
  return j;
}

Outcome cmd_enumber(const BipartiteState& state, const GlobalOptions& g,
                    const std::string& method) {
  Document doc = Document::object();
  doc["dims"] = dims_of(state);
  doc["method"] = method;
  std::optional<EntanglementReport> by_schmidt;
  std::optional<EntanglementReport> by_trace;
  if (method != "trace") {
    by_schmidt = entanglement_number_schmidt(state, g.tolerances());
    doc["schmidt"] = schmidt_route_json(*by_schmidt);
  }
  if (method != "schmidt") {
    by_trace = entanglement_number_trace(state);
    doc["trace"] = trace_route_json(*by_trace);
  }
  if (by_schmidt && by_trace) {
    doc["route_difference"] =
        std::abs(by_schmidt->entanglement_number - by_trace->entanglement_number);
  }
  const bool factorized = by_schmidt ? by_schmidt->factorized : by_trace->factorized;
  return {doc, verdict_code(factorized)};
}

void emit(const Document& doc, const GlobalOptions& g, std::ostream& out) {
  if (g.format == "machine") {
    out << emit_machine(doc);
  } else {
    out << render_text(doc);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Bipartite pure-state entanglement analysis", "spooky"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_option("--tolerance", g.tolerance,
                 "Relative residual threshold of the product criterion")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--rank-tol", g.rank_tol,
                 "Relative singular-value cutoff for the Schmidt index")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--normalize", g.normalize,
               "Normalize coefficients even without a 'normalize' line");

  std::string file;
  std::string method = "both";
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report: verdict, Schmidt data, both entanglement numbers");
  auto* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition");
  auto* enumber_cmd = app.add_subcommand("enumber", "Entanglement number");
  auto* factor_cmd = app.add_subcommand("factor", "Product test and local parts");
  for (auto* cmd : {analyze_cmd, schmidt_cmd, enumber_cmd, factor_cmd}) {
    cmd->add_option("file", file, "State file")->required();
  }
  enumber_cmd->add_option("--method", method, "Route to use")
      ->check(CLI::IsMember({"schmidt", "trace", "both"}))
      ->capture_default_str();

  std::string demo_name;
  DemoOptions demo_opts;
  auto* demo_cmd = app.add_subcommand("demo", "Rerun a built-in worked example (or 'all')");
  demo_cmd->add_option("name", demo_name, "example1..example7, action-at-a-distance, all")
      ->required();
  demo_cmd->add_option("--seed", demo_opts.seed, "Seed for randomized cases")
      ->capture_default_str();
  demo_cmd->add_option("--dim", demo_opts.dim, "Subsystem dimension for randomized cases")
      ->check(CLI::Range(std::size_t{2}, std::size_t{256}))
      ->capture_default_str();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("spooky");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    Outcome outcome;
    if (demo_cmd->parsed()) {
      outcome.doc = run_demo(demo_name, demo_opts);
      outcome.code = outcome.doc["pass"].get<bool>() ? 0 : 1;
    } else {
      const auto state = load_state_file(file, g.normalize);
      if (analyze_cmd->parsed()) {
        outcome = cmd_analyze(state, g);
      } else if (schmidt_cmd->parsed()) {
        outcome = cmd_schmidt(state, g);
      } else if (enumber_cmd->parsed()) {
        outcome = cmd_enumber(state, g, method);
      } else {
        outcome = cmd_factor(state, g);
      }
    }
    emit(outcome.doc, g, out);
    return outcome.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace spooky
