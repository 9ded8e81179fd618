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

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "urmatch/graph.hpp"
#include "urmatch/matching.hpp"

namespace urmatch {

/// An ordering x_1..x_k of an independent set I together with its induced
/// assignment p(y) = the first x_i adjacent to y, for every y in N(I).
struct AccessibilityOrdering {
  VertexSet independent_set;
  std::vector<Vertex> sequence;
  /// p_map[y] == kNoVertex unless y is in N(I).
  std::vector<Vertex> p_map;
  Matching induced_matching;
};

/// {y p(y) : y in N(I)}. Not necessarily a matching.
/// Throws GraphError if i_set is not independent or sigma is not a
/// permutation of it.
EdgeList induced_matching_edges(const Graph& g, std::span<const Vertex> i_set,
                                std::span<const Vertex> sigma);

/// Every prefix grows the neighborhood by at most one vertex.
bool is_accessibility_ordering(const Graph& g, std::span<const Vertex> i_set,
                               std::span<const Vertex> sigma);

/// Chooses the next vertex among the ascending list of extendable candidates.
using CandidatePicker = std::function<Vertex(std::span<const Vertex> candidates)>;

/// Greedily extends the empty ordering: at each step append a vertex of I
/// that adds at most one new neighbor y, with xy in `allowed` when it does.
/// Any choice works when an ordering exists at all, so the default picks the
/// lowest id.
///
/// Requires g bipartite under `sides`, i_set a maximum independent set and
/// allowed a subset of E(g); throws GraphError otherwise.
std::optional<AccessibilityOrdering> find_e_good_ordering(
    const Graph& g, const Bipartition& sides, std::span<const Vertex> i_set,
    std::span<const Edge> allowed, const CandidatePicker& pick = {});

}  // namespace urmatch
