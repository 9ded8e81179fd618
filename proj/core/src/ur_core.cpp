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

#include "urmatch/ur_core.hpp"

#include <algorithm>
#include <iterator>

namespace urmatch {

void check_matching_of(const Graph& g, const Matching& m) {
  if (m.order() != g.order()) {
    throw GraphError("matching and graph disagree on the vertex count");
  }
  for (const Edge& e : m.edges()) {
    if (!g.has_edge(e)) throw GraphError("matching edge not in graph");
  }
  if (m.covered().size() != 2 * m.size()) {
    throw GraphError("matching mate map is inconsistent");
  }
}

MatchingDigraph build_matching_digraph(const Graph& g, const Bipartition& sides,
                                       const Matching& m) {
  const auto side = validate_bipartition(g, sides);
  check_matching_of(g, m);

  std::vector<Digraph::Arc> arcs;
  arcs.reserve(g.size());
  for (const Edge& e : g.edges()) {
    const Vertex a = side[e.u] == 0 ? e.u : e.v;
    const Vertex b = e.other(a);
    if (m.contains(e)) {
      arcs.emplace_back(b, a);
    } else {
      arcs.emplace_back(a, b);
    }
  }

  MatchingDigraph md;
  md.d = Digraph(g.order(), std::move(arcs));
  for (Vertex a : sides.a) {
    if (!m.covers(a)) md.a0.push_back(a);
  }
  for (Vertex b : sides.b) {
    if (!m.covers(b)) md.b0.push_back(b);
  }
  md.v_plus = forward_reachable(md.d, md.a0);
  md.v_minus = backward_reachable(md.d, md.b0);
  return md;
}

bool is_uniquely_restricted(const Graph& g, const Matching& m) {
  check_matching_of(g, m);
  if (m.empty()) return true;
  Subgraph sub = induced_subgraph(g, m.covered());
  EdgeList local;
  local.reserve(m.size());
  for (const Edge& e : m.edges()) local.emplace_back(sub.local(e.u), sub.local(e.v));
  return is_unique_perfect_matching(sub.graph, Matching(sub.graph, local));
}

bool is_uniquely_restricted_bipartite(const Graph& g, const Bipartition& sides,
                                      const Matching& m) {
  return is_acyclic(build_matching_digraph(g, sides, m).d);
}

bool konig_maximality_check(const MatchingDigraph& md) {
  VertexSet common;
  std::set_intersection(md.v_plus.begin(), md.v_plus.end(), md.v_minus.begin(),
                        md.v_minus.end(), std::back_inserter(common));
  return common.empty();
}

std::vector<Matching> edge_exchanges(const Graph& g, const Bipartition& sides,
                                     const Matching& m) {
  check_matching_of(g, m);
  validate_bipartition(g, sides);
  if (m.size() != maximum_matching_bipartite(g, sides).size()) {
    throw GraphError("edge_exchanges needs a maximum matching");
  }
  std::vector<Matching> out;
  auto exchange = [&](Vertex uncovered, Vertex partner) {
    // partner is covered (m is maximum); swap its matching edge for
    // uncovered-partner.
    Vertex old = m.mate(partner);
    std::vector<Vertex> mate = m.mates();
    mate[old] = kNoVertex;
    mate[partner] = uncovered;
    mate[uncovered] = partner;
    out.push_back(Matching::from_mates(std::move(mate)));
  };
  for (const VertexSet* side : {&sides.a, &sides.b}) {
    for (Vertex x : *side) {
      if (m.covers(x)) continue;
      for (Vertex y : g.neighbors(x)) exchange(x, y);
    }
  }
  return out;
}

}  // namespace urmatch
