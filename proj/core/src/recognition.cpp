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

#include "urmatch/recognition.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "urmatch/accessibility.hpp"
#include "urmatch/graph_algorithms.hpp"
#include "urmatch/ur_core.hpp"

namespace urmatch {
namespace {

constexpr std::array<std::pair<FailureTag, std::string_view>, 9> kTagNames{{
    {FailureTag::kCComponentPmNotUnique, "c_component_pm_not_unique"},
    {FailureTag::kGbNoUrMatchingWithinE, "gb_no_ur_matching_within_E"},
    {FailureTag::kDComponentNoUniquePmVertex, "d_component_no_unique_pm_vertex"},
    {FailureTag::kDComponentBlocksNotOddCycles, "d_component_blocks_not_odd_cycles"},
    {FailureTag::kGbEveryMaxMatchingNotUr, "gb_every_max_matching_not_ur"},
    {FailureTag::kGbEdgeMultipleNeighbors, "gb_edge_multiple_neighbors"},
    {FailureTag::kGbDigraphCyclic, "gb_digraph_cyclic"},
    {FailureTag::kVPlusNotForest, "v_plus_not_forest"},
    {FailureTag::kVMinusNotForest, "v_minus_not_forest"},
}};

/// A D-component with memoized "H - h has a unique perfect matching".
class DComponent {
 public:
  DComponent(const Graph& g, const VertexSet& members)
      : sub_(induced_subgraph(g, members)), cache_(members.size(), -1) {}

  const Subgraph& sub() const { return sub_; }

  /// `h` is an original vertex id inside the component.
  bool unique_after_removing(Vertex h) {
    const Vertex local = sub_.local(h);
    if (cache_[local] < 0) {
      const Vertex gone[] = {local};
      cache_[local] =
          has_unique_perfect_matching(remove_vertices(sub_.graph, gone).graph) ? 1 : 0;
    }
    return cache_[local] == 1;
  }

  /// Lowest h with a unique perfect matching on H - h.
  Vertex first_unique_vertex() {
    for (Vertex h : sub_.to_parent) {
      if (unique_after_removing(h)) return h;
    }
    return kNoVertex;
  }

  /// The perfect matching of H - h, in original ids.
  EdgeList matching_without(Vertex h) const {
    const Vertex gone[] = {sub_.local(h)};
    Subgraph rest = remove_vertices(sub_.graph, gone);
    EdgeList out;
    const Matching m = maximum_matching(rest.graph);
    for (const Edge& e : m.edges()) {
      out.emplace_back(sub_.to_parent[rest.to_parent[e.u]],
                       sub_.to_parent[rest.to_parent[e.v]]);
    }
    return out;
  }

 private:
  Subgraph sub_;
  std::vector<int> cache_;
};

std::vector<DComponent> make_components(const Graph& g, const GallaiEdmonds& ge) {
  std::vector<DComponent> comps;
  comps.reserve(ge.d_components.size());
  for (const auto& members : ge.d_components) comps.emplace_back(g, members);
  return comps;
}

/// Neighbors of a inside a D-component, in original ids.
VertexSet neighbors_in(const Graph& g, Vertex a, const VertexSet& members) {
  VertexSet out;
  auto nbrs = g.neighbors(a);
  std::set_intersection(nbrs.begin(), nbrs.end(), members.begin(), members.end(),
                        std::back_inserter(out));
  return out;
}

/// Splits a G_B edge into (original A vertex, component index).
std::pair<Vertex, std::size_t> split_gb_edge(const GallaiEdmonds& ge, const Edge& e) {
  return {ge.a_set[e.u], static_cast<std::size_t>(e.v) - ge.a_set.size()};
}

AllowedEdgeSet allowed_edges(const Graph& g, const GallaiEdmonds& ge,
                             std::vector<DComponent>& comps) {
  AllowedEdgeSet allowed;
  for (const Edge& e : ge.gb.edges()) {
    auto [a, c] = split_gb_edge(ge, e);
    VertexSet hs = neighbors_in(g, a, ge.d_components[c]);
    if (hs.size() == 1 && comps[c].unique_after_removing(hs.front())) {
      allowed.edges.push_back(e);
      allowed.anchor.push_back(hs.front());
    }
  }
  return allowed;
}

bool c_components_uniquely_matchable(const Graph& g, const GallaiEdmonds& ge) {
  for (const auto& comp : ge.c_components) {
    if (!has_unique_perfect_matching(induced_subgraph(g, comp).graph)) return false;
  }
  return true;
}

/// Records a violated condition; returns true when evaluation should stop.
bool fail(RecognitionReport& report, FailureTag tag, const RecognitionOptions& options) {
  report.answer = false;
  if (!report.failure) report.failure = tag;
  if (options.all_failures) report.all_failures.push_back(tag);
  return !options.all_failures;
}

}  // namespace

std::string_view to_string(Property p) {
  return p == Property::kSomeUr ? "some" : "every";
}

std::string_view to_string(FailureTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "unknown";
}

std::optional<FailureTag> parse_failure_tag(std::string_view text) {
  for (const auto& [t, name] : kTagNames) {
    if (name == text) return t;
  }
  return std::nullopt;
}

bool AllowedEdgeSet::contains(const Edge& gb_edge) const {
  return std::binary_search(edges.begin(), edges.end(), gb_edge);
}

Vertex AllowedEdgeSet::anchor_of(const Edge& gb_edge) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), gb_edge);
  if (it == edges.end() || *it != gb_edge) return kNoVertex;
  return anchor[static_cast<std::size_t>(it - edges.begin())];
}

AllowedEdgeSet allowed_edges(const Graph& g, const GallaiEdmonds& ge) {
  auto comps = make_components(g, ge);
  return allowed_edges(g, ge, comps);
}

RecognitionReport some_ur(const Graph& g, const RecognitionOptions& options) {
  return some_ur(g, gallai_edmonds(g), options);
}

RecognitionReport some_ur(const Graph& g, const GallaiEdmonds& ge,
                          const RecognitionOptions& options) {
  RecognitionReport report;
  report.property = Property::kSomeUr;
  report.answer = true;

  if (!c_components_uniquely_matchable(g, ge) &&
      fail(report, FailureTag::kCComponentPmNotUnique, options)) {
    return report;
  }

  auto comps = make_components(g, ge);
  const AllowedEdgeSet allowed = allowed_edges(g, ge, comps);
  const VertexSet independent = max_independent_set_bipartite(ge.gb, ge.gb_sides);
  const auto ordering =
      find_e_good_ordering(ge.gb, ge.gb_sides, independent, allowed.edges);
  if (!ordering && fail(report, FailureTag::kGbNoUrMatchingWithinE, options)) {
    return report;
  }

  std::vector<Vertex> spare(comps.size(), kNoVertex);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    spare[c] = comps[c].first_unique_vertex();
    if (spare[c] == kNoVertex) {
      if (fail(report, FailureTag::kDComponentNoUniquePmVertex, options)) return report;
      break;
    }
  }
  if (!report.answer) return report;

  // Witness: unique perfect matchings of the C-components, the G-edges behind
  // the G_B matching, and for every D-component the unique perfect matching
  // of H - h where h is its matched vertex or its lowest valid spare vertex.
  EdgeList witness;
  for (const auto& members : ge.c_components) {
    Subgraph sub = induced_subgraph(g, members);
    const Matching m = maximum_matching(sub.graph);
    for (const Edge& e : m.edges()) {
      witness.emplace_back(sub.to_parent[e.u], sub.to_parent[e.v]);
    }
  }
  std::vector<Vertex> uncovered = spare;
  for (const Edge& e : ordering->induced_matching.edges()) {
    auto [a, c] = split_gb_edge(ge, e);
    const Vertex h = allowed.anchor_of(e);
    if (h == kNoVertex) throw InternalError("G_B witness edge outside E");
    witness.emplace_back(a, h);
    uncovered[c] = h;
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (const Edge& e : comps[c].matching_without(uncovered[c])) witness.push_back(e);
  }
  report.witness = Matching(g, witness);
  if (report.witness->size() != ge.maximum.size()) {
    throw InternalError("some_ur witness is not a maximum matching");
  }
  return report;
}

RecognitionReport every_ur_bipartite(const Graph& g, const Bipartition& sides,
                                     const RecognitionOptions& options) {
  RecognitionReport report;
  report.property = Property::kEveryUr;
  report.answer = true;

  const Matching m = maximum_matching_bipartite(g, sides);
  const MatchingDigraph md = build_matching_digraph(g, sides, m);
  if (!is_acyclic(md.d) && fail(report, FailureTag::kGbDigraphCyclic, options)) {
    return report;
  }
  if (!is_forest(induced_subgraph(g, md.v_plus).graph) &&
      fail(report, FailureTag::kVPlusNotForest, options)) {
    return report;
  }
  if (!is_forest(induced_subgraph(g, md.v_minus).graph)) {
    fail(report, FailureTag::kVMinusNotForest, options);
  }
  return report;
}

RecognitionReport every_ur(const Graph& g, const RecognitionOptions& options) {
  return every_ur(g, gallai_edmonds(g), options);
}

RecognitionReport every_ur(const Graph& g, const GallaiEdmonds& ge,
                           const RecognitionOptions& options) {
  RecognitionReport report;
  report.property = Property::kEveryUr;
  report.answer = true;

  if (!c_components_uniquely_matchable(g, ge) &&
      fail(report, FailureTag::kCComponentPmNotUnique, options)) {
    return report;
  }

  auto comps = make_components(g, ge);
  for (auto& comp : comps) {
    const bool odd_blocks = blocks_are_odd_cycles(comp.sub().graph);
    if (options.verify_blocks) {
      bool definitional = true;
      for (Vertex h : comp.sub().to_parent) {
        if (!comp.unique_after_removing(h)) {
          definitional = false;
          break;
        }
      }
      if (definitional != odd_blocks) {
        throw InternalError(
            "odd-cycle block test disagrees with the near-perfect matching check");
      }
    }
    if (!odd_blocks) {
      if (fail(report, FailureTag::kDComponentBlocksNotOddCycles, options)) return report;
      break;
    }
  }

  if (!every_ur_bipartite(ge.gb, ge.gb_sides).answer &&
      fail(report, FailureTag::kGbEveryMaxMatchingNotUr, options)) {
    return report;
  }

  const Matching gb_maximum = maximum_matching(ge.gb);
  for (const Edge& e : ge.gb.edges()) {
    auto [a, c] = split_gb_edge(ge, e);
    if (neighbors_in(g, a, ge.d_components[c]).size() == 1) continue;
    if (edge_in_some_maximum_matching(ge.gb, gb_maximum, e)) {
      fail(report, FailureTag::kGbEdgeMultipleNeighbors, options);
      break;
    }
  }
  return report;
}

}  // namespace urmatch
