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

#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "urmatch/graph.hpp"
#include "urmatch/matching.hpp"

// Plain-text graph format:
//
//   # comment
//   n 4
//   0 1
//   1 2
//
// The header `n <N>` comes first (after comments and blank lines); every
// other line is an edge `<u> <v>` with 0 <= u, v < N. LF and CRLF line endings
// are both accepted.

namespace urmatch::cli {

enum class ParseErrorCode {
  kMissingHeader,
  kMalformedHeader,
  kMalformedLine,
  kVertexOutOfRange,
  kDuplicateEdge,
  kLoopRejected,
  kMalformedMatching,
  kIoError,
};

std::string_view to_string(ParseErrorCode code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, std::size_t line, const std::string& detail);

  ParseErrorCode code() const { return code_; }
  /// 1-based; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  ParseErrorCode code_;
  std::size_t line_;
};

Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// Canonical rendering: header, then one `u v` line per edge in sorted order.
std::string render_graph(const Graph& g);

/// "u-v,u-v,..." with whitespace tolerated around every token. The result is
/// validated against g (edges present, pairwise disjoint).
Matching parse_matching(std::string_view text, const Graph& g);

/// "0-1,2-3", sorted.
std::string format_matching(const Matching& m);

}  // namespace urmatch::cli
