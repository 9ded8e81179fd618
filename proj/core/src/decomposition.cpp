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

#include "urmatch/decomposition.hpp"

#include <algorithm>

#include "urmatch/graph_algorithms.hpp"

namespace urmatch {
namespace {

enum class Part : std::uint8_t { kD, kA, kC };

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& part) {
  Subgraph sub = induced_subgraph(g, part);
  std::vector<VertexSet> comps = connected_components(sub.graph);
  for (auto& comp : comps) {
    for (auto& v : comp) v = sub.to_parent[v];
  }
  return comps;
}

void build_contracted(const Graph& g, GallaiEdmonds& ge) {
  const std::size_t na = ge.a_set.size();
  const std::size_t nd = ge.d_components.size();
  std::vector<Vertex> a_image(g.order(), kNoVertex);
  std::vector<std::size_t> comp_of(g.order(), nd);
  for (std::size_t i = 0; i < na; ++i) a_image[ge.a_set[i]] = static_cast<Vertex>(i);
  for (std::size_t c = 0; c < nd; ++c) {
    for (Vertex v : ge.d_components[c]) comp_of[v] = c;
  }

  EdgeList edges;
  for (Vertex a : ge.a_set) {
    for (Vertex w : g.neighbors(a)) {
      if (comp_of[w] != nd) {
        edges.emplace_back(a_image[a], ge.gb_vertex_of_component(comp_of[w]));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  ge.gb = Graph(na + nd, edges);

  ge.contraction_map.clear();
  ge.gb_sides = {};
  for (std::size_t i = 0; i < na; ++i) {
    ge.contraction_map.push_back(
        {ContractedVertex::Kind::kAVertex, static_cast<std::size_t>(ge.a_set[i])});
    ge.gb_sides.a.push_back(static_cast<Vertex>(i));
  }
  for (std::size_t c = 0; c < nd; ++c) {
    ge.contraction_map.push_back({ContractedVertex::Kind::kDComponent, c});
    ge.gb_sides.b.push_back(ge.gb_vertex_of_component(c));
  }
}

}  // namespace

Vertex GallaiEdmonds::gb_vertex_of_a(Vertex a) const {
  auto it = std::lower_bound(a_set.begin(), a_set.end(), a);
  if (it == a_set.end() || *it != a) return kNoVertex;
  return static_cast<Vertex>(it - a_set.begin());
}

GallaiEdmonds gallai_edmonds(const Graph& g) {
  GallaiEdmonds ge;
  ge.maximum = maximum_matching(g);
  const auto n = static_cast<Vertex>(g.order());

  std::vector<Part> part(g.order(), Part::kC);
  for (Vertex v = 0; v < n; ++v) {
    if (missable_vertex(g, ge.maximum, v)) part[v] = Part::kD;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (part[v] != Part::kC) continue;
    for (Vertex w : g.neighbors(v)) {
      if (part[w] == Part::kD) {
        part[v] = Part::kA;
        break;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    switch (part[v]) {
      case Part::kD: ge.d_set.push_back(v); break;
      case Part::kA: ge.a_set.push_back(v); break;
      case Part::kC: ge.c_set.push_back(v); break;
    }
  }
  ge.d_components = components_within(g, ge.d_set);
  ge.c_components = components_within(g, ge.c_set);
  build_contracted(g, ge);
  return ge;
}

bool verify_gallai_edmonds(const Graph& g, const GallaiEdmonds& ge) {
  const std::size_t n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<Part> part(n, Part::kC);
  auto mark = [&](const VertexSet& set, Part p) {
    for (Vertex v : set) {
      if (!g.contains(v) || seen[v]++) return false;
      part[v] = p;
    }
    return std::is_sorted(set.begin(), set.end());
  };
  if (!mark(ge.d_set, Part::kD) || !mark(ge.a_set, Part::kA) ||
      !mark(ge.c_set, Part::kC)) {
    return false;
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n)) return false;

  // A(G) is exactly the outside neighborhood of D(G).
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    if (part[v] == Part::kD) continue;
    const auto nbrs = g.neighbors(v);
    const bool touches_d = std::any_of(nbrs.begin(), nbrs.end(),
                                       [&](Vertex w) { return part[w] == Part::kD; });
    if (touches_d != (part[v] == Part::kA)) return false;
  }
  if (ge.d_components != components_within(g, ge.d_set)) return false;
  if (ge.c_components != components_within(g, ge.c_set)) return false;

  for (const auto& comp : ge.d_components) {
    if (!is_factor_critical(induced_subgraph(g, comp).graph)) return false;
  }
  for (const auto& comp : ge.c_components) {
    if (!has_perfect_matching(induced_subgraph(g, comp).graph)) return false;
  }
  const std::size_t nu = matching_number(g);
  if (ge.d_components.size() < ge.a_set.size()) return false;
  if (n - 2 * nu != ge.d_components.size() - ge.a_set.size()) return false;

  GallaiEdmonds rebuilt;
  rebuilt.d_set = ge.d_set;
  rebuilt.a_set = ge.a_set;
  rebuilt.c_set = ge.c_set;
  rebuilt.d_components = ge.d_components;
  build_contracted(g, rebuilt);
  return rebuilt.gb == ge.gb && rebuilt.gb_sides == ge.gb_sides &&
         rebuilt.contraction_map == ge.contraction_map;
}

}  // namespace urmatch
