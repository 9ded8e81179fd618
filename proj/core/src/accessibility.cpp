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

#include "urmatch/accessibility.hpp"

#include <algorithm>

namespace urmatch {
namespace {

void check_ordering(const Graph& g, std::span<const Vertex> i_set,
                    std::span<const Vertex> sigma) {
  if (!is_independent_set(g, i_set)) throw GraphError("set is not independent");
  VertexSet a(i_set.begin(), i_set.end());
  VertexSet b(sigma.begin(), sigma.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw GraphError("ordering is not a permutation of the set");
}

}  // namespace

EdgeList induced_matching_edges(const Graph& g, std::span<const Vertex> i_set,
                                std::span<const Vertex> sigma) {
  check_ordering(g, i_set, sigma);
  std::vector<char> claimed(g.order(), 0);
  EdgeList edges;
  for (Vertex x : sigma) {
    for (Vertex y : g.neighbors(x)) {
      if (!claimed[y]) {
        claimed[y] = 1;
        edges.emplace_back(x, y);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool is_accessibility_ordering(const Graph& g, std::span<const Vertex> i_set,
                               std::span<const Vertex> sigma) {
  check_ordering(g, i_set, sigma);
  std::vector<char> claimed(g.order(), 0);
  for (Vertex x : sigma) {
    int growth = 0;
    for (Vertex y : g.neighbors(x)) {
      if (!claimed[y]) {
        claimed[y] = 1;
        ++growth;
      }
    }
    if (growth > 1) return false;
  }
  return true;
}

std::optional<AccessibilityOrdering> find_e_good_ordering(
    const Graph& g, const Bipartition& sides, std::span<const Vertex> i_set,
    std::span<const Edge> allowed, const CandidatePicker& pick) {
  validate_bipartition(g, sides);
  if (!is_independent_set(g, i_set)) throw GraphError("set is not independent");
  if (i_set.size() + maximum_matching_bipartite(g, sides).size() != g.order()) {
    throw GraphError("independent set is not maximum");
  }
  std::vector<char> allowed_edge(g.size(), 0);
  for (const Edge& e : allowed) {
    auto idx = g.edge_index(e);
    if (!idx) throw GraphError("allowed edge is not an edge of the graph");
    allowed_edge[*idx] = 1;
  }

  const std::size_t n = g.order();
  std::vector<char> in_set(n, 0);
  for (Vertex x : i_set) in_set[x] = 1;
  std::vector<char> placed(n, 0);
  std::vector<char> claimed(n, 0);
  std::vector<std::size_t> fresh(n, 0);
  for (Vertex x : i_set) fresh[x] = g.degree(x);

  AccessibilityOrdering result;
  result.independent_set.assign(i_set.begin(), i_set.end());
  std::sort(result.independent_set.begin(), result.independent_set.end());
  result.p_map.assign(n, kNoVertex);

  auto fresh_neighbor = [&](Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      if (!claimed[y]) return y;
    }
    return kNoVertex;
  };

  std::vector<Vertex> candidates;
  while (result.sequence.size() < result.independent_set.size()) {
    candidates.clear();
    for (Vertex x : result.independent_set) {
      if (placed[x] || fresh[x] > 1) continue;
      if (fresh[x] == 1) {
        Vertex y = fresh_neighbor(x);
        if (!allowed_edge[*g.edge_index(Edge(x, y))]) continue;
      }
      candidates.push_back(x);
      if (!pick) break;
    }
    if (candidates.empty()) return std::nullopt;
    const Vertex x = pick ? pick(candidates) : candidates.front();
    if (std::find(candidates.begin(), candidates.end(), x) == candidates.end()) {
      throw GraphError("candidate picker returned a non-candidate");
    }
    placed[x] = 1;
    result.sequence.push_back(x);
    if (fresh[x] == 1) {
      Vertex y = fresh_neighbor(x);
      claimed[y] = 1;
      result.p_map[y] = x;
      for (Vertex z : g.neighbors(y)) {
        if (in_set[z]) --fresh[z];
      }
    }
  }

  EdgeList edges;
  for (Vertex y = 0; y < static_cast<Vertex>(n); ++y) {
    if (result.p_map[y] != kNoVertex) edges.emplace_back(y, result.p_map[y]);
  }
  result.induced_matching = Matching(g, edges);
  return result;
}

}  // namespace urmatch
