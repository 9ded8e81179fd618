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

#include "urmatch/graph.hpp"

#include <algorithm>
#include <string>

namespace urmatch {
namespace {

std::string edge_text(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

}  // namespace

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw GraphError("loop at vertex " + std::to_string(e.u));
    }
    if (!contains(e.u) || !contains(e.v)) {
      throw GraphError("edge " + edge_text(e) + " out of range for n=" +
                       std::to_string(n));
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge " + edge_text(*dup));
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph::Graph(std::size_t n,
             std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  EdgeList list;
  list.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
    list.emplace_back(a, b);
  }
  *this = Graph(n, list);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return false;
  const auto& list = adjacency_[a].size() <= adjacency_[b].size()
                         ? adjacency_[a]
                         : adjacency_[b];
  Vertex target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  return std::binary_search(list.begin(), list.end(), target);
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Vertex Subgraph::local(Vertex parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return kNoVertex;
  return static_cast<Vertex>(it - to_parent.begin());
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  if (std::adjacent_find(sub.to_parent.begin(), sub.to_parent.end()) !=
      sub.to_parent.end()) {
    throw GraphError("induced_subgraph: repeated vertex");
  }
  std::vector<Vertex> local(g.order(), kNoVertex);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    Vertex p = sub.to_parent[i];
    if (!g.contains(p)) throw GraphError("induced_subgraph: vertex out of range");
    local[p] = static_cast<Vertex>(i);
  }
  EdgeList edges;
  for (Vertex p : sub.to_parent) {
    for (Vertex q : g.neighbors(p)) {
      if (p < q && local[q] != kNoVertex) edges.emplace_back(local[p], local[q]);
    }
  }
  sub.graph = Graph(sub.to_parent.size(), edges);
  return sub;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : removed) {
    if (!g.contains(v)) throw GraphError("remove_vertices: vertex out of range");
    gone[v] = 1;
  }
  VertexSet keep;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs)
    : out_(n), in_(n), arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  for (const auto& [from, to] : arcs_) {
    if (from == to) throw GraphError("digraph loop at " + std::to_string(from));
    if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= n ||
        static_cast<std::size_t>(to) >= n) {
      throw GraphError("digraph arc out of range");
    }
    out_[from].push_back(to);
    in_[to].push_back(from);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

std::vector<std::uint8_t> validate_bipartition(const Graph& g,
                                               const Bipartition& sides) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> side(g.order(), kUnset);
  auto assign = [&](const VertexSet& set, std::uint8_t s) {
    for (Vertex v : set) {
      if (!g.contains(v)) throw GraphError("bipartition: vertex out of range");
      if (side[v] != kUnset) throw GraphError("bipartition: vertex listed twice");
      side[v] = s;
    }
  };
  assign(sides.a, 0);
  assign(sides.b, 1);
  if (std::find(side.begin(), side.end(), kUnset) != side.end()) {
    throw GraphError("bipartition does not cover every vertex");
  }
  for (const Edge& e : g.edges()) {
    if (side[e.u] == side[e.v]) {
      throw GraphError("bipartition: edge " + edge_text(e) +
                       " inside one side");
    }
  }
  return side;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : vertices) {
    if (!g.contains(v) || in[v]) return false;
    in[v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) return false;
  }
  return true;
}

}  // namespace urmatch
