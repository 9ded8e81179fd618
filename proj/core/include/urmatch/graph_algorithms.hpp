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

#include <optional>
#include <vector>

#include "urmatch/graph.hpp"

namespace urmatch {

/// Vertex sets of the connected components, each sorted, ordered by their
/// lowest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_forest(const Graph& g);

/// Proper 2-coloring, or nullopt if g has an odd cycle. Within each component
/// the lowest vertex goes to side A; isolated vertices land in A.
std::optional<Bipartition> bipartition(const Graph& g);

/// Edge sets of the blocks (maximal 2-connected subgraphs and bridges). Each
/// block is sorted; blocks are ordered by their smallest edge.
std::vector<EdgeList> biconnected_blocks(const Graph& g);

/// True iff every block of the connected graph g is an odd cycle. K1 counts.
/// Throws GraphError if g is disconnected.
bool blocks_are_odd_cycles(const Graph& g);

/// Kahn peeling; true iff d has no directed cycle.
bool is_acyclic(const Digraph& d);

/// Vertices reachable from any of `sources` (sources included).
VertexSet forward_reachable(const Digraph& d, std::span<const Vertex> sources);

/// Vertices that can reach any of `targets` (targets included).
VertexSet backward_reachable(const Digraph& d, std::span<const Vertex> targets);

}  // namespace urmatch
