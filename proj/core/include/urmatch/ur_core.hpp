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
#include "urmatch/graph_algorithms.hpp"
#include "urmatch/matching.hpp"

namespace urmatch {

/// The orientation D(M) of a bipartite graph: non-matching edges point from A
/// to B, matching edges from B to A. Directed paths and cycles of D(M) are
/// exactly the M-alternating ones.
struct MatchingDigraph {
  Digraph d;
  /// Uncovered vertices of side A / side B.
  VertexSet a0;
  VertexSet b0;
  /// Reachable from a0 / co-reachable to b0.
  VertexSet v_plus;
  VertexSet v_minus;
};

/// Throws GraphError on an invalid bipartition or if m is not a matching of g.
MatchingDigraph build_matching_digraph(const Graph& g, const Bipartition& sides,
                                       const Matching& m);

/// m is the unique perfect matching of g[V(m)]. Uses the edge-deletion test
/// on the induced subgraph, so it works for any graph.
bool is_uniquely_restricted(const Graph& g, const Matching& m);

/// Bipartite route: D(m) is acyclic.
bool is_uniquely_restricted_bipartite(const Graph& g, const Bipartition& sides,
                                      const Matching& m);

/// V+ and V- are disjoint, i.e. no alternating path joins a0 to b0.
bool konig_maximality_check(const MatchingDigraph& md);

/// Every matching one edge exchange away from the maximum matching m.
/// A-side exchanges first (by a, then b'), then B-side ones.
/// Throws GraphError if m is not maximum.
std::vector<Matching> edge_exchanges(const Graph& g, const Bipartition& sides,
                                     const Matching& m);

/// Throws GraphError unless every edge of m is an edge of g and the mate map
/// is consistent.
void check_matching_of(const Graph& g, const Matching& m);

}  // namespace urmatch
