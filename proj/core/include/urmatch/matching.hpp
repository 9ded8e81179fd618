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
#include <span>
#include <vector>

#include "urmatch/graph.hpp"

namespace urmatch {

/// A set of pairwise disjoint edges of a host graph.
///
/// Holds the sorted edge list and the mate map; the covered set V(M) is the
/// set of vertices with a mate.
class Matching {
 public:
  Matching() = default;

  /// Empty matching on `n` vertices.
  explicit Matching(std::size_t n) : mate_(n, kNoVertex) {}

  /// Validates that every edge is in `g` and the edges are disjoint; throws
  /// GraphError otherwise.
  Matching(const Graph& g, std::span<const Edge> edges);

  /// From a symmetric mate array (mate[v] == kNoVertex when uncovered).
  static Matching from_mates(std::vector<Vertex> mate);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::size_t order() const { return mate_.size(); }
  const EdgeList& edges() const { return edges_; }
  const std::vector<Vertex>& mates() const { return mate_; }

  Vertex mate(Vertex v) const { return mate_[v]; }
  bool covers(Vertex v) const { return mate_[v] != kNoVertex; }
  bool contains(const Edge& e) const { return mate_[e.u] == e.v; }

  /// V(M), ascending.
  VertexSet covered() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.mate_ == b.mate_;
  }
  friend bool operator<(const Matching& a, const Matching& b) {
    return a.edges_ < b.edges_;
  }

 private:
  std::vector<Vertex> mate_;
  EdgeList edges_;
};

/// Maximum matching by blossom contraction. Greedy start in id order, then one
/// augmenting-path search per exposed vertex, lowest id first.
Matching maximum_matching(const Graph& g);

/// Hopcroft-Karp on the given sides. Throws GraphError on an invalid
/// bipartition.
Matching maximum_matching_bipartite(const Graph& g, const Bipartition& sides);

std::size_t matching_number(const Graph& g);

/// nu(g - removed), warm-started from a maximum matching of g. One
/// single-root search per removed vertex.
std::size_t matching_number_without(const Graph& g, const Matching& maximum,
                                    std::span<const Vertex> removed);

/// True iff nu(g - u - v) == nu(g) - 1. Throws GraphError if e is not an edge.
bool edge_in_some_maximum_matching(const Graph& g, const Edge& e);
bool edge_in_some_maximum_matching(const Graph& g, const Matching& maximum,
                                   const Edge& e);

/// True iff some maximum matching leaves v uncovered (nu(g - v) == nu(g)).
bool missable_vertex(const Graph& g, Vertex v);
bool missable_vertex(const Graph& g, const Matching& maximum, Vertex v);

bool has_perfect_matching(const Graph& g);

/// Exactly one perfect matching. The zero-vertex graph qualifies.
bool has_unique_perfect_matching(const Graph& g);

/// `m` is a perfect matching of g and g - e has none for every e in m.
bool is_unique_perfect_matching(const Graph& g, const Matching& m);

/// g - u has a perfect matching for every u. K1 qualifies; K0 does not.
bool is_factor_critical(const Graph& g);

/// Complement of the Konig cover built from a maximum matching: unmatched
/// A-vertices and everything alternating-reachable from them, on side A;
/// the unreached part of side B.
VertexSet max_independent_set_bipartite(const Graph& g, const Bipartition& sides);

}  // namespace urmatch
