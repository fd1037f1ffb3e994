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

#include "spooky/state_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "spooky/errors.hpp"

namespace spooky {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

bool parse_real(std::string_view s, double& value) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s.front() == '+') return false;
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), last, value);
  return ec == std::errc{} && ptr == last && std::isfinite(value);
}

bool parse_imaginary(std::string_view s, double& value) {
  if (s.empty() || s == "+") {
    value = 1.0;
    return true;
  }
  if (s == "-") {
    value = -1.0;
    return true;
  }
  return parse_real(s, value);
}

std::size_t parse_count(std::string_view s, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(s) + "'");
  }
  return value;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = text.substr(pos, end - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

ComplexScalar parse_entry(std::string_view token, std::size_t line) {
  try {
    return parse_complex(token);
  } catch (const ParseError& e) {
    throw ParseError(line, e.detail());
  }
}

void append_real(std::string& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

ComplexScalar parse_complex(std::string_view literal) {
  const auto s = trim(literal);
  const auto bad = [&] {
    return ParseError(0, "invalid complex literal '" + std::string(literal) + "'");
  };
  if (s.empty()) throw bad();

  double re = 0.0;
  double im = 0.0;
  if (s.back() != 'i') {
    if (!parse_real(s, re)) throw bad();
    return {re, 0.0};
  }

  const auto body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (!parse_imaginary(body, im)) throw bad();
  } else {
    if (!parse_real(body.substr(0, split), re) ||
        !parse_imaginary(body.substr(split), im)) {
      throw bad();
    }
  }
  return {re, im};
}

std::string format_complex(ComplexScalar z) {
  std::string out;
  if (z.imag() == 0.0) {
    append_real(out, z.real());
    return out;
  }
  if (z.real() != 0.0) {
    append_real(out, z.real());
    if (!std::signbit(z.imag())) out += '+';
  }
  append_real(out, z.imag());
  out += 'i';
  return out;
}

StateFile parse_state_file_raw(std::string_view text) {
  const auto lines = content_lines(text);
  auto it = lines.begin();
  if (it == lines.end()) throw ParseError(0, "empty state file");

  StateFile file;
  {
    const auto tokens = split_ws(it->text);
    if (tokens.size() != 3 || tokens[0] != "dims") {
      throw ParseError(it->number, "expected 'dims <m> <n>'");
    }
    file.dim_left = parse_count(tokens[1], it->number, "dimension");
    file.dim_right = parse_count(tokens[2], it->number, "dimension");
    if (file.dim_left == 0 || file.dim_right == 0) {
      throw ParseError(it->number, "dimensions must be positive");
    }
    ++it;
  }
  if (it != lines.end() && it->text == "normalize") {
    file.normalize = true;
    ++it;
  }
  if (it == lines.end()) throw ParseError(0, "missing 'dense' or 'sparse' section");
  if (it->text == "dense") {
    file.layout = StateLayout::dense;
  } else if (it->text == "sparse") {
    file.layout = StateLayout::sparse;
  } else {
    throw ParseError(it->number, "expected 'dense' or 'sparse', found '" +
                                     std::string(it->text) + "'");
  }
  const std::size_t header_line = it->number;
  ++it;

  const std::size_t m = file.dim_left;
  const std::size_t n = file.dim_right;
  file.coefficients = ComplexMatrix(m, n);

  if (file.layout == StateLayout::dense) {
    std::size_t row = 0;
    for (; it != lines.end(); ++it, ++row) {
      if (row == m) {
        throw ParseError(it->number, "dimension mismatch: more than " +
                                         std::to_string(m) + " rows");
      }
      const auto tokens = split_ws(it->text);
      if (tokens.size() != n) {
        throw ParseError(it->number, "dimension mismatch: expected " +
                                         std::to_string(n) + " entries, found " +
                                         std::to_string(tokens.size()));
      }
      for (std::size_t j = 0; j < n; ++j) {
        file.coefficients(row, j) = parse_entry(tokens[j], it->number);
      }
    }
    if (row != m) {
      throw ParseError(header_line, "dimension mismatch: expected " +
                                        std::to_string(m) + " rows, found " +
                                        std::to_string(row));
    }
    return file;
  }

  std::vector<bool> seen(m * n, false);
  for (; it != lines.end(); ++it) {
    const auto tokens = split_ws(it->text);
    if (tokens.size() != 3) {
      throw ParseError(it->number, "expected '<i> <j> <complex>'");
    }
    const auto i = parse_count(tokens[0], it->number, "row index");
    const auto j = parse_count(tokens[1], it->number, "column index");
    if (i < 1 || i > m || j < 1 || j > n) {
      throw ParseError(it->number, "index (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ") out of range");
    }
    const std::size_t flat = (i - 1) * n + (j - 1);
    if (seen[flat]) {
      throw ParseError(it->number, "duplicate entry (" + std::to_string(i) +
                                       ", " + std::to_string(j) + ")");
    }
    seen[flat] = true;
    file.coefficients(i - 1, j - 1) = parse_entry(tokens[2], it->number);
  }
  return file;
}

BipartiteState parse_state_file(std::string_view text, bool force_normalize) {
  auto file = parse_state_file_raw(text);
  const double n = frobenius_norm(file.coefficients);
  if (file.normalize || force_normalize) {
    if (n == 0.0) throw ParseError(0, "cannot normalize an all-zero state");
    return BipartiteState::normalized(std::move(file.coefficients));
  }
  if (!(std::abs(n * n - 1.0) <= kNormTolerance)) {
    throw ParseError(0, "coefficients have squared norm " + std::to_string(n * n) +
                            "; add a 'normalize' line or pass --normalize");
  }
  return BipartiteState(std::move(file.coefficients));
}

BipartiteState load_state_file(const std::filesystem::path& path,
                               bool force_normalize) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open state file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_state_file(buffer.str(), force_normalize);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

std::string write_state_file(const BipartiteState& state, StateLayout layout) {
  const auto& c = state.coefficients();
  std::string out = "dims " + std::to_string(c.rows()) + " " +
                    std::to_string(c.cols()) + "\n";
  if (layout == StateLayout::dense) {
    out += "dense\n";
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < c.cols(); ++j) {
        if (j) out += ' ';
        out += format_complex(c(i, j));
      }
      out += '\n';
    }
    return out;
  }
  out += "sparse\n";
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (c(i, j) == ComplexScalar{}) continue;
      out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
             format_complex(c(i, j)) + "\n";
    }
  }
  return out;
}

}  // namespace spooky
