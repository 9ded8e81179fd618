// Copyright 2026 The urmatch Authors.
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

#include "urmatch/cli/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace urmatch::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool parse_uint(std::string_view s, long long& value) {
  if (s.empty() || s.front() == '-' || s.front() == '+') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string_view to_string(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::kMissingHeader: return "missing_header";
    case ParseErrorCode::kMalformedHeader: return "malformed_header";
    case ParseErrorCode::kMalformedLine: return "malformed_line";
    case ParseErrorCode::kVertexOutOfRange: return "vertex_out_of_range";
    case ParseErrorCode::kDuplicateEdge: return "duplicate_edge";
    case ParseErrorCode::kLoopRejected: return "loop_rejected";
    case ParseErrorCode::kMalformedMatching: return "malformed_matching";
    case ParseErrorCode::kIoError: return "io_error";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorCode code, std::size_t line, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) +
                         (line ? " at line " + std::to_string(line) : std::string()) +
                         (detail.empty() ? std::string() : ": " + detail)),
      code_(code),
      line_(line) {}

Graph parse_graph(std::string_view text) {
  long long n = -1;
  EdgeList edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_uint(tokens[1], n) ||
          n > (1LL << 30)) {
        throw ParseError(ParseErrorCode::kMalformedHeader, line_no,
                         "expected `n <vertex count>`");
      }
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (tokens.size() != 2 || !parse_uint(tokens[0], u) || !parse_uint(tokens[1], v)) {
      throw ParseError(ParseErrorCode::kMalformedLine, line_no, "expected `<u> <v>`");
    }
    if (u >= n || v >= n) {
      throw ParseError(ParseErrorCode::kVertexOutOfRange, line_no,
                       "vertex ids must be below " + std::to_string(n));
    }
    if (u == v) throw ParseError(ParseErrorCode::kLoopRejected, line_no, "");
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) {
      throw ParseError(ParseErrorCode::kDuplicateEdge, line_no,
                       std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(ParseErrorCode::kMissingHeader, 0, "no `n <N>` line");
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseErrorCode::kIoError, 0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string render_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Matching parse_matching(std::string_view text, const Graph& g) {
  EdgeList edges;
  std::size_t pos = 0;
  const std::string_view all = trim(text);
  while (!all.empty() && pos <= all.size()) {
    std::size_t end = all.find(',', pos);
    if (end == std::string_view::npos) end = all.size();
    const std::string_view item = trim(all.substr(pos, end - pos));
    pos = end + 1;
    const auto dash = item.find('-');
    long long u = 0;
    long long v = 0;
    if (dash == std::string_view::npos || !parse_uint(trim(item.substr(0, dash)), u) ||
        !parse_uint(trim(item.substr(dash + 1)), v)) {
      throw ParseError(ParseErrorCode::kMalformedMatching, 0,
                       "expected `u-v`, got `" + std::string(item) + "`");
    }
    if (u >= static_cast<long long>(g.order()) || v >= static_cast<long long>(g.order())) {
      throw ParseError(ParseErrorCode::kMalformedMatching, 0, "vertex out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Matching(g, edges);
  } catch (const GraphError& e) {
    throw ParseError(ParseErrorCode::kMalformedMatching, 0, e.what());
  }
}

std::string format_matching(const Matching& m) {
  std::string out;
  for (const Edge& e : m.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

}  // namespace urmatch::cli
