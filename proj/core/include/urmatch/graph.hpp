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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace urmatch {

/// Vertices are dense ids in [0, n).
using Vertex = std::int32_t;

inline constexpr Vertex kNoVertex = -1;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Precondition violations (bad edge, invalid bipartition, malformed matching).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph.
///
/// The edge list is sorted lexicographically and each neighbor list is sorted
/// ascending, so every traversal in the library visits vertices in id order.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n);

  /// Throws GraphError on loops, parallel edges or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return adjacency_.empty(); }

  const EdgeList& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < order();
  }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Position of `e` in edges(), if present.
  std::optional<std::size_t> edge_index(const Edge& e) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  EdgeList edges_;
};

/// A graph derived from a parent graph, with the map back to parent ids.
struct Subgraph {
  Graph graph;
  /// to_parent[i] is the parent id of local vertex i (ascending).
  VertexSet to_parent;

  /// Local id of a parent vertex, or kNoVertex.
  Vertex local(Vertex parent) const;
};

/// g[vertices]; `vertices` need not be sorted but must be distinct.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// g - removed.
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

/// Simple digraph without loops; arcs sorted, per-vertex out/in lists sorted.
class Digraph {
 public:
  using Arc = std::pair<Vertex, Vertex>;

  Digraph() = default;
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t order() const { return out_.size(); }
  std::size_t size() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<Arc> arcs_;
};

/// Two-coloring (A, B) of a bipartite graph.
struct Bipartition {
  VertexSet a;
  VertexSet b;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Per-vertex side lookup: 0 for A, 1 for B. Throws GraphError unless
/// `sides` partitions V(g) and no edge has both ends on one side.
std::vector<std::uint8_t> validate_bipartition(const Graph& g,
                                               const Bipartition& sides);

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices);

}  // namespace urmatch
