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
#include <vector>

#include "urmatch/graph.hpp"
#include "urmatch/matching.hpp"

namespace urmatch {

/// What a vertex of the contracted bipartite graph stands for.
struct ContractedVertex {
  enum class Kind { kAVertex, kDComponent };
  Kind kind;
  /// Original vertex id for kAVertex, index into d_components otherwise.
  std::size_t index;

  friend bool operator==(const ContractedVertex&, const ContractedVertex&) = default;
};

/// Gallai-Edmonds partition D/A/C of V(G) with the contracted bipartite
/// graph G_B.
///
/// G_B is G - C(G) with the edges inside A(G) deleted and every component of
/// G[D(G)] contracted to one vertex. Its ids are laid out as the A(G) vertices
/// in ascending order, followed by the D-components ordered by lowest member.
struct GallaiEdmonds {
  VertexSet d_set;
  VertexSet a_set;
  VertexSet c_set;
  std::vector<VertexSet> d_components;
  std::vector<VertexSet> c_components;

  Graph gb;
  /// gb_sides.a holds the A(G) images, gb_sides.b the component images.
  Bipartition gb_sides;
  std::vector<ContractedVertex> contraction_map;

  /// A maximum matching of the input graph computed along the way.
  Matching maximum;

  Vertex gb_vertex_of_a(Vertex a) const;
  Vertex gb_vertex_of_component(std::size_t component) const {
    return static_cast<Vertex>(a_set.size() + component);
  }
};

/// D(G) by the per-vertex test nu(G - v) == nu(G).
GallaiEdmonds gallai_edmonds(const Graph& g);

/// Re-derives the partition structure and checks the structure theorem:
/// D-components factor-critical, C-components perfectly matchable, and
/// n - 2 nu(G) == #D-components - |A(G)|.
bool verify_gallai_edmonds(const Graph& g, const GallaiEdmonds& ge);

}  // namespace urmatch
