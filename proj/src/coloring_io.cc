// Copyright 2026 The tc3 Authors
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

#include "tc3/coloring_io.h"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace tc3 {

std::string_view format_problem_name(FormatProblem problem) {
  switch (problem) {
    case FormatProblem::kMalformedHeader: return "malformed header";
    case FormatProblem::kVersionMismatch: return "version mismatch";
    case FormatProblem::kTruncatedPayload: return "truncated payload";
    case FormatProblem::kBadPayload: return "bad payload";
    case FormatProblem::kIo: return "i/o error";
  }
  return "?";
}

namespace {

constexpr std::size_t kDigitsPerLine = 64;
constexpr char kHexDigits[] = "0123456789abcdef";

[[noreturn]] void header_error(const std::string& message) {
  throw FormatError(FormatProblem::kMalformedHeader, 0,
                    "malformed header: " + message);
}

std::uint64_t header_int(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) {
    header_error("expected '" + std::string(key) + "...', got '" +
                 std::string(token) + "'");
  }
  const auto digits = token.substr(key.size());
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size()) {
    header_error("bad integer in '" + std::string(token) + "'");
  }
  return value;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

std::string serialize_coloring(const TripleColoring& coloring) {
  std::string out = "tc3 1 ";
  out += coloring.is_explicit() ? "explicit" : "implicit";
  out += " N=" + std::to_string(coloring.num_vertices());
  out += " l=" + std::to_string(coloring.num_colors());
  if (const auto* spec = coloring.generator_spec()) {
    out += ' ';
    out += spec->to_string();
    out += '\n';
    return out;
  }
  out += '\n';
  const PackedColors& colors = *coloring.packed();
  const std::uint64_t count = colors.size();
  out.reserve(out.size() + count + count / kDigitsPerLine + 1);
  for (std::uint64_t r = 0; r < count; ++r) {
    out += kHexDigits[colors.get(r)];
    if ((r + 1) % kDigitsPerLine == 0 || r + 1 == count) out += '\n';
  }
  return out;
}

TripleColoring parse_coloring(std::string_view text) {
  const auto eol = text.find('\n');
  if (eol == std::string_view::npos) header_error("missing newline");
  const std::string header(text.substr(0, eol));
  std::istringstream in(header);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.size() < 5 || tokens[0] != "tc3") header_error("expected 'tc3 <version> ...'");
  if (tokens[1] != "1") {
    throw FormatError(FormatProblem::kVersionMismatch, 4,
                      "unsupported tc3 version '" + tokens[1] + "'");
  }
  const std::string& kind = tokens[2];
  const std::uint64_t n = header_int(tokens[3], "N=");
  const std::uint64_t l = header_int(tokens[4], "l=");
  if (n > std::numeric_limits<Vertex>::max()) header_error("N too large");
  if (l < 1 || l > static_cast<std::uint64_t>(kMaxColors)) {
    header_error("l must lie in [1, 16]");
  }
  const auto n_vertices = static_cast<Vertex>(n);
  const int n_colors = static_cast<int>(l);

  if (kind == "implicit") {
    std::string rest;
    for (std::size_t i = 5; i < tokens.size(); ++i) {
      if (!rest.empty()) rest += ' ';
      rest += tokens[i];
    }
    if (eol + 1 != text.size()) {
      throw FormatError(FormatProblem::kBadPayload, eol + 1,
                        "implicit coloring carries no payload");
    }
    try {
      return TripleColoring::implicit_coloring(GeneratorSpec::parse(rest),
                                               n_vertices, n_colors);
    } catch (const FormatError&) {
      throw;
    } catch (const Error& e) {
      header_error(e.what());
    }
  }
  if (kind != "explicit") header_error("unknown backing '" + kind + "'");
  if (tokens.size() != 5) header_error("trailing fields after l=");

  const std::uint64_t count = choose3(n_vertices);
  PackedColors colors(count, n_colors);
  std::uint64_t pos = eol + 1;
  for (std::uint64_t r = 0; r < count; ++r) {
    if (pos >= text.size()) {
      throw FormatError(FormatProblem::kTruncatedPayload, pos,
                        "payload ends after " + std::to_string(r) + " of " +
                            std::to_string(count) + " colors at byte " +
                            std::to_string(pos));
    }
    const int v = hex_value(text[pos]);
    if (v < 0 || v >= n_colors) {
      throw FormatError(FormatProblem::kBadPayload, pos,
                        "bad color digit at byte " + std::to_string(pos));
    }
    colors.set(r, v);
    ++pos;
    if ((r + 1) % kDigitsPerLine == 0 || r + 1 == count) {
      if (pos >= text.size()) {
        throw FormatError(FormatProblem::kTruncatedPayload, pos,
                          "missing newline at byte " + std::to_string(pos));
      }
      if (text[pos] != '\n') {
        throw FormatError(FormatProblem::kBadPayload, pos,
                          "expected newline at byte " + std::to_string(pos));
      }
      ++pos;
    }
  }
  if (pos != text.size()) {
    throw FormatError(FormatProblem::kBadPayload, pos,
                      "trailing data at byte " + std::to_string(pos));
  }
  return TripleColoring::explicit_coloring(n_vertices, n_colors,
                                           std::move(colors));
}

void write_coloring(const TripleColoring& coloring,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw FormatError(FormatProblem::kIo, 0,
                      "cannot open '" + path.string() + "' for writing");
  }
  const std::string text = serialize_coloring(coloring);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw FormatError(FormatProblem::kIo, 0,
                      "write failed for '" + path.string() + "'");
  }
}

TripleColoring read_coloring(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError(FormatProblem::kIo, 0,
                      "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_coloring(buffer.str());
}

}  // namespace tc3
