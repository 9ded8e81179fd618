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

#include <vector>

#include "urmatch/graph.hpp"

namespace urmatch::detail {

/// Single-root augmenting-path search with blossom contraction.
///
/// Vertices can be switched off and one edge can be banned, so the same
/// engine answers nu(g - S) and "does g - e have a perfect matching" without
/// building derived graphs. Scratch state is reset only on the vertices a
/// search touched.
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g);

  void deactivate(Vertex v) { active_[v] = 0; }
  void activate(Vertex v) { active_[v] = 1; }
  bool active(Vertex v) const { return active_[v] != 0; }

  void ban_edge(const Edge& e) { banned_ = e; }
  void clear_ban() { banned_ = Edge(); }

  /// Looks for an augmenting path from the exposed vertex `root` and flips it
  /// into `mate` if found.
  bool augment_from(Vertex root, std::vector<Vertex>& mate);

 private:
  bool usable(Vertex from, Vertex to) const;
  Vertex find_path(Vertex root, const std::vector<Vertex>& mate);
  Vertex lowest_common_base(Vertex a, Vertex b, const std::vector<Vertex>& mate);
  void mark_path(Vertex v, Vertex b, Vertex child, const std::vector<Vertex>& mate);
  void visit(Vertex v);

  const Graph& graph_;
  std::vector<char> active_;
  Edge banned_;

  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> even_;
  std::vector<char> in_blossom_;
  std::vector<unsigned> lca_stamp_;
  unsigned stamp_ = 0;
  std::vector<Vertex> touched_;
  std::vector<char> is_touched_;
  std::vector<Vertex> queue_;
};

}  // namespace urmatch::detail
