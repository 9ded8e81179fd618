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

#include "urmatch/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "blossom.hpp"

namespace urmatch {

Matching::Matching(const Graph& g, std::span<const Edge> edges)
    : mate_(g.order(), kNoVertex) {
  for (const Edge& e : edges) {
    if (!g.has_edge(e)) {
      throw GraphError("matching edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " is not an edge of the graph");
    }
    if (mate_[e.u] != kNoVertex || mate_[e.v] != kNoVertex) {
      throw GraphError("matching edges are not disjoint at edge " +
                       std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    mate_[e.u] = e.v;
    mate_[e.v] = e.u;
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

Matching Matching::from_mates(std::vector<Vertex> mate) {
  Matching m;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v) {
    Vertex w = mate[v];
    if (w == kNoVertex) continue;
    if (w < 0 || static_cast<std::size_t>(w) >= mate.size() || mate[w] != v || w == v) {
      throw GraphError("mate array is not a symmetric involution");
    }
    if (v < w) m.edges_.emplace_back(v, w);
  }
  m.mate_ = std::move(mate);
  return m;
}

VertexSet Matching::covered() const {
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(mate_.size()); ++v) {
    if (mate_[v] != kNoVertex) out.push_back(v);
  }
  return out;
}

Matching maximum_matching(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Vertex> mate(g.order(), kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (mate[v] != kNoVertex) continue;
    for (Vertex w : g.neighbors(v)) {
      if (mate[w] == kNoVertex) {
        mate[v] = w;
        mate[w] = v;
        break;
      }
    }
  }
  detail::BlossomSearch search(g);
  for (Vertex v = 0; v < n; ++v) {
    if (mate[v] == kNoVertex) search.augment_from(v, mate);
  }
  return Matching::from_mates(std::move(mate));
}

Matching maximum_matching_bipartite(const Graph& g, const Bipartition& sides) {
  validate_bipartition(g, sides);
  const auto n = g.order();
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<Vertex> mate(n, kNoVertex);
  std::vector<int> dist(n, kInf);

  auto bfs = [&] {
    std::deque<Vertex> queue;
    bool found = false;
    for (Vertex a : sides.a) {
      if (mate[a] == kNoVertex) {
        dist[a] = 0;
        queue.push_back(a);
      } else {
        dist[a] = kInf;
      }
    }
    while (!queue.empty()) {
      Vertex a = queue.front();
      queue.pop_front();
      for (Vertex b : g.neighbors(a)) {
        Vertex next = mate[b];
        if (next == kNoVertex) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[a] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  };

  // Iterative layered DFS; it[a] is the next neighbor index to try.
  std::vector<std::size_t> it(n, 0);
  auto dfs = [&](Vertex start) {
    std::vector<Vertex> path{start};
    while (!path.empty()) {
      Vertex a = path.back();
      auto nbrs = g.neighbors(a);
      bool advanced = false;
      while (it[a] < nbrs.size()) {
        Vertex b = nbrs[it[a]++];
        Vertex next = mate[b];
        if (next == kNoVertex) {
          // Flip the path start..a, b.
          Vertex free_b = b;
          for (auto p = path.rbegin(); p != path.rend(); ++p) {
            Vertex prev_b = mate[*p];
            mate[*p] = free_b;
            mate[free_b] = *p;
            free_b = prev_b;
          }
          return true;
        }
        if (dist[next] == dist[a] + 1) {
          path.push_back(next);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist[a] = kInf;
        path.pop_back();
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (Vertex a : sides.a) {
      if (mate[a] == kNoVertex) dfs(a);
    }
  }
  return Matching::from_mates(std::move(mate));
}

std::size_t matching_number(const Graph& g) { return maximum_matching(g).size(); }

std::size_t matching_number_without(const Graph& g, const Matching& maximum,
                                    std::span<const Vertex> removed) {
  // Removing one vertex from a graph with a maximum matching can only open
  // augmenting paths that end at its former mate, so one search per vertex
  // keeps the matching maximum.
  detail::BlossomSearch search(g);
  std::vector<Vertex> mate = maximum.mates();
  std::size_t size = maximum.size();
  for (Vertex v : removed) {
    if (!g.contains(v)) throw GraphError("vertex out of range");
    if (!search.active(v)) continue;
    search.deactivate(v);
    Vertex u = mate[v];
    if (u == kNoVertex) continue;
    mate[u] = kNoVertex;
    mate[v] = kNoVertex;
    --size;
    if (search.augment_from(u, mate)) ++size;
  }
  return size;
}

bool edge_in_some_maximum_matching(const Graph& g, const Matching& maximum,
                                   const Edge& e) {
  if (!g.has_edge(e)) throw GraphError("edge is not in the graph");
  if (maximum.contains(e)) return true;
  const Vertex both[] = {e.u, e.v};
  return matching_number_without(g, maximum, both) + 1 == maximum.size();
}

bool edge_in_some_maximum_matching(const Graph& g, const Edge& e) {
  return edge_in_some_maximum_matching(g, maximum_matching(g), e);
}

bool missable_vertex(const Graph& g, const Matching& maximum, Vertex v) {
  if (!g.contains(v)) throw GraphError("vertex out of range");
  if (!maximum.covers(v)) return true;
  const Vertex one[] = {v};
  return matching_number_without(g, maximum, one) == maximum.size();
}

bool missable_vertex(const Graph& g, Vertex v) {
  return missable_vertex(g, maximum_matching(g), v);
}

bool has_perfect_matching(const Graph& g) {
  return 2 * matching_number(g) == g.order();
}

bool is_unique_perfect_matching(const Graph& g, const Matching& m) {
  if (2 * m.size() != g.order()) return false;
  detail::BlossomSearch search(g);
  std::vector<Vertex> mate = m.mates();
  for (const Edge& e : m.edges()) {
    // M - e is maximum in g - e unless an augmenting u..v path avoids e.
    mate[e.u] = kNoVertex;
    mate[e.v] = kNoVertex;
    search.ban_edge(e);
    const bool other = search.augment_from(e.u, mate);
    if (other) return false;
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return true;
}

bool has_unique_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  Matching m = maximum_matching(g);
  return is_unique_perfect_matching(g, m);
}

bool is_factor_critical(const Graph& g) {
  if (g.order() % 2 == 0) return false;
  Matching m = maximum_matching(g);
  if (2 * m.size() + 1 != g.order()) return false;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (!missable_vertex(g, m, v)) return false;
  }
  return true;
}

VertexSet max_independent_set_bipartite(const Graph& g, const Bipartition& sides) {
  const auto side = validate_bipartition(g, sides);
  Matching m = maximum_matching_bipartite(g, sides);
  std::vector<char> reached(g.order(), 0);
  std::deque<Vertex> queue;
  for (Vertex a : sides.a) {
    if (!m.covers(a)) {
      reached[a] = 1;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    Vertex a = queue.front();
    queue.pop_front();
    for (Vertex b : g.neighbors(a)) {
      if (reached[b] || m.mate(a) == b) continue;
      reached[b] = 1;
      Vertex next = m.mate(b);
      if (next != kNoVertex && !reached[next]) {
        reached[next] = 1;
        queue.push_back(next);
      }
    }
  }
  VertexSet independent;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    const bool on_a = side[v] == 0;
    if (on_a == static_cast<bool>(reached[v])) independent.push_back(v);
  }
  return independent;
}

}  // namespace urmatch
